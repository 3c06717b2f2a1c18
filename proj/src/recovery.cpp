#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "jointspec/errors.hpp"
#include "jointspec/inverse.hpp"

namespace jointspec {
namespace {

struct PolyFit {
    double intercept = 0.0;
    double max_residual = 0.0;
};

// Least squares h = c0 + c1 hbar + ... + c_order hbar^order.
PolyFit fit_polynomial(std::span<const double> hbar, std::span<const double> h, int order) {
    const auto n = static_cast<Eigen::Index>(hbar.size());
    if (order == 0) {
        double mean = 0.0;
        for (const double v : h) mean += v;
        mean /= static_cast<double>(n);
        PolyFit fit{mean, 0.0};
        for (const double v : h) fit.max_residual = std::max(fit.max_residual, std::abs(v - mean));
        return fit;
    }
    Eigen::MatrixXd a(n, order + 1);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double p = 1.0;
        for (int c = 0; c <= order; ++c) {
            a(i, c) = p;
            p *= hbar[static_cast<std::size_t>(i)];
        }
        b(i) = h[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
    return {coef(0), (a * coef - b).cwiseAbs().maxCoeff()};
}

std::vector<Point2> clip(const std::vector<Point2>& poly, const Point2& dir, double h) {
    std::vector<Point2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % n];
        const double fp = p.x * dir.x + p.y * dir.y - h;
        const double fq = q.x * dir.x + q.y * dir.y - h;
        if (fp <= 0.0) out.push_back(p);
        if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
            const double t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

Extrapolation extrapolate_intervals(std::span<const HullSample> hulls, int order) {
    std::vector<double> hb, lo, hi;
    for (const auto& s : hulls) {
        const auto& iv = std::get<Interval>(s.hull);
        hb.push_back(s.hbar);
        lo.push_back(iv.lo);
        hi.push_back(iv.hi);
    }
    const PolyFit flo = fit_polynomial(hb, lo, order);
    const PolyFit fhi = fit_polynomial(hb, hi, order);
    const PolyFit glo = fit_polynomial(hb, lo, order - 1);
    const PolyFit ghi = fit_polynomial(hb, hi, order - 1);
    if (fhi.intercept < flo.intercept) throw ExtrapolationError("negative fitted diameter");
    Extrapolation out;
    out.hull = Interval{flo.intercept, fhi.intercept};
    out.residual = std::max(std::abs(flo.intercept - glo.intercept),
                            std::abs(fhi.intercept - ghi.intercept));
    out.fit_residual = std::max(flo.max_residual, fhi.max_residual);
    out.directions = {{-1.0, 0.0}, {1.0, 0.0}};
    out.intercepts = {-flo.intercept, fhi.intercept};
    return out;
}

}  // namespace

std::vector<Point2> uniform_directions(int m) {
    if (m < 1) throw InvalidArgument("uniform_directions: m must be positive");
    std::vector<Point2> dirs;
    for (int i = 0; i < m; ++i) {
        const double t = 2.0 * std::numbers::pi * i / m;
        dirs.push_back({std::cos(t), std::sin(t)});
    }
    return dirs;
}

Extrapolation extrapolate_hull(std::span<const HullSample> hulls, int m, ExtrapolationOrder order) {
    const auto dirs = uniform_directions(m);
    return extrapolate_hull(hulls, dirs, order);
}

Extrapolation extrapolate_hull(std::span<const HullSample> hulls, std::span<const Point2> directions,
                               ExtrapolationOrder order) {
    std::set<double> distinct;
    for (const auto& s : hulls) distinct.insert(s.hbar);
    if (distinct.size() < 3) throw InvalidArgument("extrapolate_hull needs >= 3 distinct hbar values");
    const int deg = static_cast<int>(order);

    const bool intervals = std::holds_alternative<Interval>(hulls.front().hull);
    for (const auto& s : hulls)
        if (std::holds_alternative<Interval>(s.hull) != intervals)
            throw DimensionMismatch("extrapolate_hull: mixed interval and polygon hulls");
    if (intervals) return extrapolate_intervals(hulls, deg);

    if (directions.size() < 16) throw InvalidArgument("extrapolate_hull needs >= 16 directions");

    // Direction set: the requested ones plus every outward edge normal of the inputs,
    // ordered by angle.
    std::vector<std::pair<double, Point2>> keyed;
    auto add = [&](Point2 d) {
        const double len = std::hypot(d.x, d.y);
        d = {d.x / len, d.y / len};
        const double ang = std::atan2(d.y, d.x);
        for (const auto& [a, e] : keyed)
            if (std::abs(a - ang) < 1e-12) return;
        keyed.emplace_back(ang, d);
    };
    for (const auto& d : directions) add(d);
    for (const auto& s : hulls) {
        const auto& v = std::get<ConvexPolygon>(s.hull).vertices;
        if (v.size() < 3) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[i];
            const Point2& b = v[(i + 1) % v.size()];
            add({b.y - a.y, a.x - b.x});
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& p, const auto& q) { return p.first < q.first; });

    Extrapolation out;
    std::vector<double> hb;
    for (const auto& s : hulls) hb.push_back(s.hbar);
    double bound = 1.0;
    for (const auto& [ang, d] : keyed) {
        std::vector<double> h;
        for (const auto& s : hulls) h.push_back(support(std::get<ConvexPolygon>(s.hull), d));
        const PolyFit fit = fit_polynomial(hb, h, deg);
        const PolyFit lower = fit_polynomial(hb, h, deg - 1);
        out.directions.push_back(d);
        out.intercepts.push_back(fit.intercept);
        out.residual = std::max(out.residual, std::abs(fit.intercept - lower.intercept));
        out.fit_residual = std::max(out.fit_residual, fit.max_residual);
        bound = std::max(bound, std::abs(fit.intercept));
    }

    for (std::size_t i = 0; i < out.directions.size(); ++i)
        for (std::size_t j = i + 1; j < out.directions.size(); ++j) {
            const Point2& a = out.directions[i];
            const Point2& b = out.directions[j];
            if (std::abs(a.x + b.x) < 1e-12 && std::abs(a.y + b.y) < 1e-12 &&
                out.intercepts[i] + out.intercepts[j] < 0.0)
                throw ExtrapolationError("negative fitted diameter");
        }

    bound *= 4.0;
    std::vector<Point2> poly{{-bound, -bound}, {bound, -bound}, {bound, bound}, {-bound, bound}};
    for (std::size_t i = 0; i < out.directions.size(); ++i) {
        poly = clip(poly, out.directions[i], out.intercepts[i]);
        if (poly.empty()) throw ExtrapolationError("half-plane intersection is empty");
    }
    ConvexPolygon hull = convex_hull(poly);
    if (hull.vertices.empty()) throw ExtrapolationError("half-plane intersection is empty");
    out.hull = std::move(hull);
    return out;
}

RecoveryReport recover(std::span<const JointSpectrum> spectra, RecoveryOptions options) {
    std::set<double> distinct;
    for (const auto& js : spectra) distinct.insert(js.param.hbar);
    if (distinct.size() < 3)
        throw InvalidArgument("recover needs spectra at >= 3 distinct hbar values, got " +
                              std::to_string(distinct.size()));
    const int d = spectra.front().dim;
    if (d != 1 && d != 2) throw DimensionMismatch("recover supports d = 1 or 2");
    for (const auto& js : spectra)
        if (js.dim != d) throw DimensionMismatch("recover: spectra of different dimension");

    RecoveryReport report;
    for (const auto& js : spectra) {
        if (options.check_lattice) report.lattice_fits.push_back(fit_lattice(js));
        report.hulls.push_back({js.param.hbar, js.hull()});
    }
    std::sort(report.hulls.begin(), report.hulls.end(),
              [](const HullSample& a, const HullSample& b) { return a.hbar > b.hbar; });

    report.extrapolation = extrapolate_hull(report.hulls, options.directions, options.order);
    report.rounding_tolerance = options.rounding_tolerance.value_or(
        std::max(10.0 * report.extrapolation.residual, 1e-9));
    if (!(report.rounding_tolerance > 0.0))
        throw InvalidArgument("recover: rounding tolerance must be positive");

    RoundedPolytope rounded =
        d == 1 ? round_to_rational_interval(std::get<Interval>(report.extrapolation.hull),
                                            options.denominator_cap, report.rounding_tolerance)
               : round_to_rational_polytope(std::get<ConvexPolygon>(report.extrapolation.hull),
                                            options.denominator_cap, report.rounding_tolerance);
    report.recovered = std::move(rounded.polytope);
    report.rounding = std::move(rounded.deltas);
    report.delzant = delzant_check(report.recovered);
    return report;
}

}  // namespace jointspec
