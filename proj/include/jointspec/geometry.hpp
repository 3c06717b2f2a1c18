#pragma once

#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace jointspec {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

// Counterclockwise vertex list. degenerate is set for point and segment hulls
// (one or two vertices).
struct ConvexPolygon {
    std::vector<Point2> vertices;
    bool degenerate = false;
};

using Hull = std::variant<Interval, ConvexPolygon>;

// Rows are points in R^d.
using PointCloud = Eigen::MatrixXd;

inline constexpr double kCollinearTol = 1e-12;

// Andrew's monotone chain; collinear and duplicate points are pruned with an
// absolute cross-product tolerance.
ConvexPolygon convex_hull(std::span<const Point2> points, double collinear_tol = kCollinearTol);
Interval interval_hull(std::span<const double> values);

// Convex hull of a cloud with one or two columns.
Hull hull_of(const PointCloud& cloud);

double distance_to_polygon(const Point2& p, const ConvexPolygon& poly);
bool contains(const ConvexPolygon& poly, const Point2& p, double tol = 0.0);

// Support value max_{x in hull} <x, direction>.
double support(const ConvexPolygon& poly, const Point2& direction);
double area(const ConvexPolygon& poly);

// Exact symmetric Hausdorff distances. For convex sets the point-to-set
// distance is convex, so the maximum over each set is attained at a vertex.
double hausdorff(const Interval& a, const Interval& b);
double hausdorff(const ConvexPolygon& a, const ConvexPolygon& b);
double hausdorff(const Hull& a, const Hull& b);

// Brute-force Hausdorff distance between finite point sets (same column count).
double hausdorff(const PointCloud& a, const PointCloud& b);

// Directed distance sup_{a} inf_{b} |a - b|. The OpenMP kernel and its serial
// reference are both exported; hausdorff() uses the parallel one.
double directed_hausdorff_serial(const PointCloud& a, const PointCloud& b);
double directed_hausdorff_parallel(const PointCloud& a, const PointCloud& b);

}  // namespace jointspec
