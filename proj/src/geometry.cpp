#include "jointspec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jointspec/errors.hpp"

namespace jointspec {
namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    return dist(p, Point2{a.x + t * dx, a.y + t * dy});
}

}  // namespace

ConvexPolygon convex_hull(std::span<const Point2> points, double collinear_tol) {
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    ConvexPolygon out;
    if (pts.size() <= 1) {
        out.vertices = pts;
        out.degenerate = true;
        return out;
    }

    std::vector<Point2> h(2 * pts.size());
    std::size_t m = 0;
    for (const auto& p : pts) {
        while (m >= 2 && cross(h[m - 2], h[m - 1], p) <= collinear_tol) --m;
        h[m++] = p;
    }
    const std::size_t lower = m + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (m >= lower && cross(h[m - 2], h[m - 1], pts[i]) <= collinear_tol) --m;
        h[m++] = pts[i];
    }
    h.resize(m - 1);

    // All points within tolerance of a line: report the segment endpoints.
    if (h.size() <= 2) {
        out.vertices = {pts.front(), pts.back()};
        if (dist(pts.front(), pts.back()) == 0.0) out.vertices.pop_back();
        out.degenerate = true;
        return out;
    }
    out.vertices = std::move(h);
    return out;
}

Interval interval_hull(std::span<const double> values) {
    if (values.empty()) throw InvalidArgument("interval_hull: empty input");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, *hi};
}

Hull hull_of(const PointCloud& cloud) {
    if (cloud.rows() == 0) throw InvalidArgument("hull_of: empty point cloud");
    if (cloud.cols() == 1) {
        return Interval{cloud.col(0).minCoeff(), cloud.col(0).maxCoeff()};
    }
    if (cloud.cols() != 2) throw DimensionMismatch("hull_of: only d = 1, 2 supported");
    std::vector<Point2> pts(static_cast<std::size_t>(cloud.rows()));
    for (Eigen::Index i = 0; i < cloud.rows(); ++i) pts[i] = {cloud(i, 0), cloud(i, 1)};
    return convex_hull(pts);
}

bool contains(const ConvexPolygon& poly, const Point2& p, double tol) {
    return distance_to_polygon(p, poly) <= tol;
}

double distance_to_polygon(const Point2& p, const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    if (v.empty()) throw InvalidArgument("distance_to_polygon: empty polygon");
    if (v.size() == 1) return dist(p, v[0]);
    if (v.size() == 2) return segment_distance(p, v[0], v[1]);

    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        if (cross(a, b, p) < 0.0) inside = false;
        best = std::min(best, segment_distance(p, a, b));
    }
    return inside ? 0.0 : best;
}

double support(const ConvexPolygon& poly, const Point2& direction) {
    if (poly.vertices.empty()) throw InvalidArgument("support: empty polygon");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : poly.vertices) best = std::max(best, v.x * direction.x + v.y * direction.y);
    return best;
}

double area(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    double twice = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        twice += a.x * b.y - a.y * b.x;
    }
    return 0.5 * twice;
}

double hausdorff(const Interval& a, const Interval& b) {
    return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

double hausdorff(const ConvexPolygon& a, const ConvexPolygon& b) {
    double d = 0.0;
    for (const auto& p : a.vertices) d = std::max(d, distance_to_polygon(p, b));
    for (const auto& p : b.vertices) d = std::max(d, distance_to_polygon(p, a));
    return d;
}

double hausdorff(const Hull& a, const Hull& b) {
    if (a.index() != b.index()) throw DimensionMismatch("hausdorff: hulls of different dimension");
    if (const auto* ia = std::get_if<Interval>(&a)) return hausdorff(*ia, std::get<Interval>(b));
    return hausdorff(std::get<ConvexPolygon>(a), std::get<ConvexPolygon>(b));
}

double directed_hausdorff_serial(const PointCloud& a, const PointCloud& b) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < b.rows(); ++j)
            best = std::min(best, (a.row(i) - b.row(j)).squaredNorm());
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

double directed_hausdorff_parallel(const PointCloud& a, const PointCloud& b) {
    double worst = 0.0;
    const Eigen::Index na = a.rows();
    const Eigen::Index nb = b.rows();
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (Eigen::Index i = 0; i < na; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < nb; ++j)
            best = std::min(best, (a.row(i) - b.row(j)).squaredNorm());
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
    if (a.rows() == 0 || b.rows() == 0) throw InvalidArgument("hausdorff: empty point set");
    if (a.cols() != b.cols()) throw DimensionMismatch("hausdorff: point dimensions differ");
    return std::max(directed_hausdorff_parallel(a, b), directed_hausdorff_parallel(b, a));
}

}  // namespace jointspec
