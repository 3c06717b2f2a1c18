#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "jointspec/geometry.hpp"
#include "jointspec/spectrum.hpp"

namespace jointspec {

// ---------------------------------------------------------------------------
// Lattice structure of toric joint spectra.

struct LatticeFit {
    std::vector<double> origin;   // minimal point per axis
    std::vector<double> spacing;  // median gap per axis, estimated from data
    double residual = 0.0;        // max distance from a point to its nearest lattice node
    int k = 0;                    // 0 when the spectrum carries no integer k
};

// Throws SimplicityViolation on any multiplicity > 1, InsufficientPoints with
// fewer than two distinct values on an axis, NotALattice when
// residual > 0.1 * spacing.
LatticeFit fit_lattice(const JointSpectrum& js);

// Number of eigenvalues (with multiplicity) in the closed ball of `radius`
// around each point, minus one for the point itself, summed. Zero means every
// ball isolates its eigenvalue.
long isolation_violations(const JointSpectrum& js, double radius);

// ---------------------------------------------------------------------------
// Rational polytopes and the Delzant test.

using Rational = boost::rational<std::int64_t>;

struct RationalPoint {
    Rational x{0};
    Rational y{0};

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct IntVec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const IntVec2&, const IntVec2&) = default;
};

// d = 2: counterclockwise vertices, edge i runs from vertex i to i+1 with
// primitive outward normal edge_normals[i].
// d = 1: vertices are the interval endpoints (y unused), normals (-1) and (+1).
struct Polytope {
    int dim = 2;
    std::vector<RationalPoint> vertices;
    std::vector<IntVec2> edge_normals;
    bool delzant = false;

    std::vector<Point2> vertices_double() const;
};

// Best rational approximation with denominator <= cap (convergents and
// semiconvergents of the continued fraction).
Rational best_rational(double x, std::int64_t cap);

// Exact rational polygon; computes normals and the Delzant flag. Throws if the
// vertices are not strictly convex counterclockwise.
Polytope make_polytope(std::vector<RationalPoint> vertices);
Polytope make_interval_polytope(Rational lo, Rational hi);

// Interprets double vertices as rationals with denominator <= cap; throws
// NonRational when a coordinate is not within 1e-12 of such a rational.
Polytope polytope_from_points(std::span<const Point2> vertices, std::int64_t cap = 20);

struct VertexCertificate {
    RationalPoint vertex;
    IntVec2 edge_out;  // primitive, towards the next vertex
    IntVec2 edge_in;   // primitive, towards the previous vertex
    std::int64_t determinant = 0;
};

struct DelzantReport {
    bool delzant = false;
    std::vector<VertexCertificate> certificates;
};

// A vertex passes iff its two primitive edge vectors have determinant +-1.
// Intervals pass by convention.
DelzantReport delzant_check(const Polytope& p);

struct RoundingDeltas {
    std::vector<double> direction;  // radians between original and snapped edge directions
    std::vector<double> offset;     // distance between original and snapped supporting lines
    std::vector<double> vertex;     // displacement of each vertex

    double max() const;
};

struct RoundedPolytope {
    Polytope polytope;
    RoundingDeltas deltas;
};

inline constexpr std::int64_t kDefaultDenominatorCap = 20;
inline constexpr double kDefaultRoundingTol = 1e-2;

// Snaps edge directions to primitive integer vectors, then line offsets to
// rationals, and re-intersects. Throws RoundingFailure when a delta exceeds
// `tolerance` or the snapped polygon is not convex.
RoundedPolytope round_to_rational_polytope(const ConvexPolygon& p,
                                           std::int64_t denominator_cap = kDefaultDenominatorCap,
                                           double tolerance = kDefaultRoundingTol);
RoundedPolytope round_to_rational_interval(const Interval& p,
                                           std::int64_t denominator_cap = kDefaultDenominatorCap,
                                           double tolerance = kDefaultRoundingTol);

// ---------------------------------------------------------------------------
// Hull extrapolation and the full recovery pipeline.

struct HullSample {
    double hbar = 0.0;
    Hull hull;
};

enum class ExtrapolationOrder { linear = 1, quadratic = 2 };

struct Extrapolation {
    Hull hull;
    // max over directions of |intercept(order) - intercept(order - 1)|
    double residual = 0.0;
    // max least-squares residual of the support fits
    double fit_residual = 0.0;
    std::vector<Point2> directions;
    std::vector<double> intercepts;
};

std::vector<Point2> uniform_directions(int m);

// Fits every support value h_hbar(theta) by a polynomial in hbar and
// intersects the half-planes {x . theta <= h_0(theta)}. The input hulls' own
// edge normals are added to `directions`, so constant input is reproduced.
Extrapolation extrapolate_hull(std::span<const HullSample> hulls, std::span<const Point2> directions,
                               ExtrapolationOrder order = ExtrapolationOrder::quadratic);
Extrapolation extrapolate_hull(std::span<const HullSample> hulls, int m = 64,
                               ExtrapolationOrder order = ExtrapolationOrder::quadratic);

struct RecoveryOptions {
    int directions = 64;
    ExtrapolationOrder order = ExtrapolationOrder::quadratic;
    std::int64_t denominator_cap = kDefaultDenominatorCap;
    bool check_lattice = true;
    // Overrides the default max(10 x extrapolation residual, 1e-9).
    std::optional<double> rounding_tolerance;
};

struct RecoveryReport {
    Polytope recovered;
    DelzantReport delzant;
    std::vector<HullSample> hulls;
    std::vector<LatticeFit> lattice_fits;
    Extrapolation extrapolation;
    RoundingDeltas rounding;
    double rounding_tolerance = 0.0;
};

// hulls -> extrapolate_hull -> round -> delzant_check.
RecoveryReport recover(std::span<const JointSpectrum> spectra, RecoveryOptions options = {});

std::string to_string(const Rational& r);

}  // namespace jointspec
