#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "jointspec/errors.hpp"
#include "jointspec/inverse.hpp"

namespace jointspec {
namespace {

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

IntVec2 primitive(const Rational& x, const Rational& y) {
    const std::int64_t l = std::lcm(x.denominator(), y.denominator());
    std::int64_t ix = x.numerator() * (l / x.denominator());
    std::int64_t iy = y.numerator() * (l / y.denominator());
    const std::int64_t g = std::gcd(ix, iy);
    if (g == 0) throw InvalidArgument("primitive: zero vector");
    return {ix / g, iy / g};
}

IntVec2 snap_direction(double dx, double dy, std::int64_t cap) {
    if (std::abs(dx) >= std::abs(dy)) {
        const Rational t = best_rational(dy / dx, cap);
        const std::int64_t s = dx > 0 ? 1 : -1;
        return {s * t.denominator(), s * t.numerator()};
    }
    const Rational t = best_rational(dx / dy, cap);
    const std::int64_t s = dy > 0 ? 1 : -1;
    return {s * t.numerator(), s * t.denominator()};
}

double angle_between(double ax, double ay, double bx, double by) {
    return std::abs(std::atan2(ax * by - ay * bx, ax * bx + ay * by));
}

}  // namespace

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

std::vector<Point2> Polytope::vertices_double() const {
    std::vector<Point2> out;
    for (const auto& v : vertices) out.push_back({to_double(v.x), to_double(v.y)});
    return out;
}

Rational best_rational(double x, std::int64_t cap) {
    if (!std::isfinite(x)) throw InvalidArgument("best_rational: non-finite input");
    if (cap < 1) throw InvalidArgument("best_rational: cap must be >= 1");
    long double r = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const long double a = std::floor(r);
        const auto ai = static_cast<std::int64_t>(a);
        const std::int64_t q2 = q0 + ai * q1;
        if (q2 > cap) break;
        const std::int64_t p2 = p0 + ai * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const long double frac = r - a;
        if (frac < 1e-15L) return {p1, q1};
        r = 1.0L / frac;
    }
    // Best semiconvergent between the last two convergents.
    const std::int64_t step = (cap - q0) / q1;
    const Rational semi(p0 + step * p1, q0 + step * q1);
    const Rational conv(p1, q1);
    return std::abs(to_double(semi) - x) < std::abs(to_double(conv) - x) ? semi : conv;
}

Polytope make_interval_polytope(Rational lo, Rational hi) {
    if (!(lo < hi)) throw InvalidArgument("interval polytope needs lo < hi");
    Polytope p;
    p.dim = 1;
    p.vertices = {{lo, Rational(0)}, {hi, Rational(0)}};
    p.edge_normals = {{-1, 0}, {1, 0}};
    p.delzant = true;
    return p;
}

Polytope make_polytope(std::vector<RationalPoint> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) throw InvalidArgument("polytope needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i)
        if (!(cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]) > 0))
            throw InvalidArgument("polytope vertices must be strictly convex and counterclockwise");
    Polytope p;
    p.dim = 2;
    p.vertices = std::move(vertices);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = p.vertices[i];
        const auto& b = p.vertices[(i + 1) % n];
        const IntVec2 e = primitive(b.x - a.x, b.y - a.y);
        p.edge_normals.push_back({e.y, -e.x});
    }
    p.delzant = delzant_check(p).delzant;
    return p;
}

Polytope polytope_from_points(std::span<const Point2> vertices, std::int64_t cap) {
    std::vector<RationalPoint> exact;
    for (const auto& v : vertices) {
        RationalPoint r{best_rational(v.x, cap), best_rational(v.y, cap)};
        if (std::abs(to_double(r.x) - v.x) > 1e-12 || std::abs(to_double(r.y) - v.y) > 1e-12) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "vertex (" << v.x << ", " << v.y << ") is not rational with denominator <= "
                << cap;
            throw NonRational(msg.str());
        }
        exact.push_back(r);
    }
    return make_polytope(std::move(exact));
}

DelzantReport delzant_check(const Polytope& p) {
    DelzantReport report;
    if (p.dim == 1) {
        report.delzant = true;
        return report;
    }
    const std::size_t n = p.vertices.size();
    if (n < 3) throw InvalidArgument("delzant_check: polygon needs at least 3 vertices");
    report.delzant = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = p.vertices[i];
        const auto& next = p.vertices[(i + 1) % n];
        const auto& prev = p.vertices[(i + n - 1) % n];
        VertexCertificate c;
        c.vertex = v;
        c.edge_out = primitive(next.x - v.x, next.y - v.y);
        c.edge_in = primitive(prev.x - v.x, prev.y - v.y);
        c.determinant = c.edge_out.x * c.edge_in.y - c.edge_out.y * c.edge_in.x;
        if (std::abs(c.determinant) != 1) report.delzant = false;
        report.certificates.push_back(c);
    }
    return report;
}

double RoundingDeltas::max() const {
    double m = 0.0;
    for (const auto* v : {&direction, &offset, &vertex})
        for (const double d : *v) m = std::max(m, d);
    return m;
}

RoundedPolytope round_to_rational_polytope(const ConvexPolygon& poly, std::int64_t cap,
                                           double tolerance) {
    const auto& v = poly.vertices;
    if (poly.degenerate || v.size() < 3)
        throw InvalidArgument("round_to_rational_polytope: polygon is degenerate");
    const std::size_t n = v.size();

    struct Line {
        IntVec2 normal;
        Rational offset;
        std::size_t start;  // index of the original vertex where the edge begins
    };
    RoundingDeltas deltas;
    std::vector<Line> lines;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const IntVec2 dir = snap_direction(dx, dy, cap);
        deltas.direction.push_back(angle_between(dx, dy, static_cast<double>(dir.x),
                                                 static_cast<double>(dir.y)));
        const IntVec2 normal{dir.y, -dir.x};
        const double len = std::hypot(static_cast<double>(normal.x), static_cast<double>(normal.y));
        const double offset = normal.x * 0.5 * (a.x + b.x) + normal.y * 0.5 * (a.y + b.y);
        // Snap the offset measured in units of the normal's length.
        const Rational snapped = best_rational(offset, cap);
        deltas.offset.push_back(std::abs(offset - to_double(snapped)) / len);
        if (!lines.empty() && lines.back().normal == normal) {
            if (lines.back().offset != snapped)
                throw RoundingFailure("consecutive edges snapped to the same normal but different lines");
            continue;
        }
        lines.push_back({normal, snapped, i});
    }
    if (lines.size() > 1 && lines.front().normal == lines.back().normal) {
        if (lines.front().offset != lines.back().offset)
            throw RoundingFailure("first and last edges snapped to parallel distinct lines");
        lines.front().start = lines.back().start;
        lines.pop_back();
    }
    if (lines.size() < 3) throw RoundingFailure("fewer than 3 distinct edges after snapping");

    std::vector<RationalPoint> vertices;
    const std::size_t m = lines.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Line& l1 = lines[(i + m - 1) % m];
        const Line& l2 = lines[i];
        const std::int64_t det = l1.normal.x * l2.normal.y - l1.normal.y * l2.normal.x;
        if (det == 0) throw RoundingFailure("adjacent snapped edges are parallel");
        const Rational x = (l1.offset * l2.normal.y - l2.offset * l1.normal.y) / det;
        const Rational y = (l2.offset * l1.normal.x - l1.offset * l2.normal.x) / det;
        vertices.push_back({x, y});
        const Point2& orig = v[l2.start];
        deltas.vertex.push_back(std::hypot(to_double(x) - orig.x, to_double(y) - orig.y));
    }

    if (deltas.max() > tolerance) {
        std::ostringstream msg;
        msg << "rounding delta " << deltas.max() << " exceeds tolerance " << tolerance;
        throw RoundingFailure(msg.str());
    }
    try {
        return {make_polytope(std::move(vertices)), std::move(deltas)};
    } catch (const InvalidArgument& e) {
        throw RoundingFailure(std::string("snapped polygon is not convex: ") + e.what());
    }
}

RoundedPolytope round_to_rational_interval(const Interval& p, std::int64_t cap, double tolerance) {
    const Rational lo = best_rational(p.lo, cap);
    const Rational hi = best_rational(p.hi, cap);
    RoundingDeltas deltas;
    deltas.offset = {std::abs(p.lo - to_double(lo)), std::abs(p.hi - to_double(hi))};
    deltas.vertex = deltas.offset;
    if (deltas.max() > tolerance) {
        std::ostringstream msg;
        msg << "rounding delta " << deltas.max() << " exceeds tolerance " << tolerance;
        throw RoundingFailure(msg.str());
    }
    if (!(lo < hi)) throw RoundingFailure("interval collapsed after rounding");
    return {make_interval_polytope(lo, hi), std::move(deltas)};
}

}  // namespace jointspec
