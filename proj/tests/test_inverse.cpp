#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jointspec/errors.hpp"
#include "jointspec/inverse.hpp"

using namespace jointspec;

namespace {

JointSpectrum spectrum_of(std::vector<std::vector<double>> coords, double hbar = 0.1) {
    JointSpectrum js{SemiclassicalParam::from_hbar(hbar), static_cast<int>(coords.front().size()), {}, 0.0};
    for (auto& c : coords) js.points.push_back({std::move(c), 1});
    js.sort_points();
    return js;
}

RationalPoint rp(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

ConvexPolygon square(double half) {
    return convex_hull(std::vector<Point2>{{-half, -half}, {half, -half}, {half, half}, {-half, half}});
}

double max_vertex_error(const std::vector<Point2>& got, const std::vector<Point2>& want) {
    double worst = 0.0;
    for (const auto& w : want) {
        double best = INFINITY;
        for (const auto& g : got) best = std::min(best, std::hypot(g.x - w.x, g.y - w.y));
        worst = std::max(worst, best);
    }
    return got.size() == want.size() ? worst : INFINITY;
}

}  // namespace

TEST_CASE("fit_lattice examples") {
    const LatticeFit s2 = fit_lattice(toric_joint_spectrum({ToricName::S2, 10}));
    CHECK(s2.spacing[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(s2.origin[0] == doctest::Approx(-10.0 / 12.0).epsilon(1e-15));
    CHECK(s2.residual <= 1e-12);
    CHECK(s2.k == 10);

    const LatticeFit pair = fit_lattice(toric_joint_spectrum({ToricName::S2xS2, 4}));
    for (int a = 0; a < 2; ++a) {
        CHECK(pair.spacing[a] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(pair.origin[a] == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    }

    CHECK_THROWS_AS(fit_lattice(spectrum_of({{0.5}})), InsufficientPoints);
}

TEST_CASE("fit_lattice errors") {
    JointSpectrum doubled = spectrum_of({{0.0}, {1.0}, {2.0}});
    doubled.points[1].multiplicity = 2;
    try {
        fit_lattice(doubled);
        FAIL("expected a simplicity violation");
    } catch (const SimplicityViolation& e) {
        CHECK(std::string(e.what()).find("(1)") != std::string::npos);
    }
    CHECK_THROWS_AS(fit_lattice(spectrum_of({{0.0}, {1.0}, {2.0}, {3.45}})), NotALattice);
}

TEST_CASE("fit_lattice is affine equivariant") {
    // Dyadic data and power-of-two scalings keep every operation exact.
    std::vector<std::vector<double>> base;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j) base.push_back({-0.75 + 0.125 * i, 0.5 + 0.25 * j});
    const LatticeFit f = fit_lattice(spectrum_of(base));
    const double a[2] = {4.0, 0.5};
    const double b[2] = {1.5, -0.25};
    auto mapped = base;
    for (auto& p : mapped)
        for (int c = 0; c < 2; ++c) p[c] = a[c] * p[c] + b[c];
    const LatticeFit g = fit_lattice(spectrum_of(mapped));
    for (int c = 0; c < 2; ++c) {
        CHECK(g.origin[c] == a[c] * f.origin[c] + b[c]);
        CHECK(g.spacing[c] == a[c] * f.spacing[c]);
    }

    // Toric spectra under a generic positive diagonal map, to round-off.
    const JointSpectrum js = toric_joint_spectrum({ToricName::S2xS2, 7});
    const LatticeFit t = fit_lattice(js);
    JointSpectrum moved = js;
    for (auto& p : moved.points) {
        p.coords[0] = 3.0 * p.coords[0] + 0.1;
        p.coords[1] = 0.7 * p.coords[1] - 2.0;
    }
    const LatticeFit u = fit_lattice(moved);
    CHECK(u.origin[0] == doctest::Approx(3.0 * t.origin[0] + 0.1).epsilon(1e-14));
    CHECK(u.spacing[1] == doctest::Approx(0.7 * t.spacing[1]).epsilon(1e-13));
}

TEST_CASE("isolation of toric eigenvalues") {
    for (const int k : {1, 5, 30}) {
        const JointSpectrum js = toric_joint_spectrum({ToricName::S2xS2, k});
        const LatticeFit f = fit_lattice(js);
        CHECK(isolation_violations(js, f.spacing[0] / 4) == 0);
        CHECK(isolation_violations(js, f.spacing[0] * 1.01) > 0);
    }
}

TEST_CASE("best_rational") {
    CHECK(best_rational(0.5, 20) == Rational(1, 2));
    CHECK(best_rational(-2.0 / 3.0, 20) == Rational(-2, 3));
    CHECK(best_rational(3.14159265358979, 7) == Rational(22, 7));
    // Among q <= 3, 4/3 is closer to sqrt(2) than 3/2.
    CHECK(best_rational(std::sqrt(2.0), 3) == Rational(4, 3));
    CHECK(best_rational(1.002, 20) == Rational(1));
    CHECK_THROWS_AS(best_rational(NAN, 5), InvalidArgument);
}

TEST_CASE("delzant_check examples") {
    const Polytope sq = make_polytope({rp(0, 0), rp(1, 0), rp(1, 1), rp(0, 1)});
    CHECK(sq.delzant);
    for (const auto& c : delzant_check(sq).certificates) CHECK(std::abs(c.determinant) == 1);

    CHECK(make_polytope({rp(0, 0), rp(1, 0), rp(0, 1)}).delzant);

    const Polytope bad = make_polytope({rp(0, 0), rp(2, 0), rp(0, 1)});
    const DelzantReport report = delzant_check(bad);
    CHECK_FALSE(report.delzant);
    bool found = false;
    for (const auto& c : report.certificates)
        if (c.vertex == rp(0, 1)) {
            found = true;
            CHECK(std::abs(c.determinant) == 2);
            const bool edges = (c.edge_out == IntVec2{0, -1} && c.edge_in == IntVec2{2, -1}) ||
                               (c.edge_in == IntVec2{0, -1} && c.edge_out == IntVec2{2, -1});
            CHECK(edges);
        }
    CHECK(found);
    CHECK(make_interval_polytope(Rational(-1), Rational(1)).delzant);
    CHECK_THROWS_AS(make_polytope({rp(0, 0), rp(0, 1), rp(1, 0)}), InvalidArgument);
    CHECK_THROWS_AS(polytope_from_points(std::vector<Point2>{{0, 0}, {std::sqrt(2.0), 0}, {0, 1}}), NonRational);
}

TEST_CASE("delzant_check is invariant under unimodular maps") {
    const std::vector<std::vector<RationalPoint>> polygons{
        {rp(0, 0), rp(2, 0), rp(0, 1)},
        {rp(0, 0), rp(3, 0), rp(3, 1), rp(1, 2), rp(0, 2)},
        {rp(-1, -1), rp(1, -1), rp(1, 1), rp(-1, 1)},
        {rp(0, 0), rp(2, 0), rp(2, 1), rp(1, 2), rp(0, 2)}};
    const std::int64_t maps[][4] = {{1, 1, 0, 1}, {2, 1, 1, 1}, {0, -1, 1, 0}, {1, 0, 0, -1}, {3, 2, 4, 3}};
    for (const auto& poly : polygons) {
        const DelzantReport before = delzant_check(make_polytope(poly));
        for (const auto& m : maps) {
            std::vector<RationalPoint> image;
            for (const auto& v : poly) image.push_back({m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y});
            if (m[0] * m[3] - m[1] * m[2] < 0) std::reverse(image.begin(), image.end());
            const DelzantReport after = delzant_check(make_polytope(image));
            CHECK(after.delzant == before.delzant);
            std::vector<std::int64_t> a, b;
            for (const auto& c : before.certificates) a.push_back(std::abs(c.determinant));
            for (const auto& c : after.certificates) b.push_back(std::abs(c.determinant));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}

TEST_CASE("round_to_rational_polytope examples") {
    const ConvexPolygon perturbed =
        convex_hull(std::vector<Point2>{{-1.002, -0.998}, {1.002, -0.998}, {1.002, 0.998}, {-1.002, 0.998}});
    const RoundedPolytope r = round_to_rational_polytope(perturbed);
    CHECK(r.polytope.vertices_double().size() == 4);
    CHECK(max_vertex_error(r.polytope.vertices_double(), square(1.0).vertices) == 0.0);
    CHECK(r.polytope.delzant);
    CHECK(r.deltas.max() == doctest::Approx(0.002 * std::sqrt(2.0)).epsilon(1e-6));

    const ConvexPolygon tri = convex_hull(std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}});
    const RoundedPolytope t = round_to_rational_polytope(tri, 20, 1e-12);
    CHECK(t.polytope.vertices == std::vector<RationalPoint>{rp(0, 0), rp(1, 0), rp(0, 1)});
    CHECK(t.deltas.max() == 0.0);

    const ConvexPolygon irrational = convex_hull(std::vector<Point2>{{0, 0}, {1, std::sqrt(2.0)}, {0, 2}});
    CHECK_THROWS_AS(round_to_rational_polytope(irrational, 3, 1e-3), RoundingFailure);
    CHECK_THROWS_AS(round_to_rational_polytope(convex_hull(std::vector<Point2>{{0, 0}, {1, 1}})), InvalidArgument);
}

TEST_CASE("extrapolate_hull examples") {
    std::vector<HullSample> constant;
    for (const double h : {0.1, 0.05, 0.025}) constant.push_back({h, square(1.0)});
    const Extrapolation e = extrapolate_hull(constant);
    CHECK(max_vertex_error(std::get<ConvexPolygon>(e.hull).vertices, square(1.0).vertices) <= 1e-12);

    std::vector<HullSample> pair, line;
    for (const int k : {8, 16, 32}) {
        const double side = static_cast<double>(k) / (k + 2);
        pair.push_back({1.0 / k, square(side)});
        line.push_back({1.0 / k, Interval{-side, side}});
    }
    for (const auto order : {ExtrapolationOrder::linear, ExtrapolationOrder::quadratic}) {
        CHECK(max_vertex_error(std::get<ConvexPolygon>(extrapolate_hull(pair, 64, order).hull).vertices,
                               square(1.0).vertices) <= (order == ExtrapolationOrder::linear ? 2.5e-2 : 5e-3));
        const Interval iv = std::get<Interval>(extrapolate_hull(line, 64, order).hull);
        const double tol = order == ExtrapolationOrder::linear ? 2e-2 : 5e-3;
        CHECK(std::abs(iv.lo + 1.0) <= tol);
        CHECK(std::abs(iv.hi - 1.0) <= tol);
    }

    CHECK_THROWS_AS(extrapolate_hull(std::vector<HullSample>(pair.begin(), pair.begin() + 2)), InvalidArgument);
    CHECK_THROWS_AS(extrapolate_hull(pair, 8), InvalidArgument);
    // Valid intervals at every sample whose linear fits cross before hbar = 0.
    std::vector<HullSample> crossing;
    for (const double h : {0.3, 0.2, 0.1}) crossing.push_back({h, Interval{1.0 - 10.0 * h, 0.9 - 5.0 * h}});
    CHECK_THROWS_AS(extrapolate_hull(crossing, 64, ExtrapolationOrder::linear), ExtrapolationError);
}

TEST_CASE("extrapolate_hull reproduces constant random polygons") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point2> pts;
        for (int i = 0; i < 8; ++i) pts.push_back({c(rng), c(rng)});
        const ConvexPolygon poly = convex_hull(pts);
        std::vector<HullSample> hulls;
        for (const double h : {0.2, 0.1, 0.05, 0.01}) hulls.push_back({h, poly});
        const Extrapolation e = extrapolate_hull(hulls);
        const auto& out = std::get<ConvexPolygon>(e.hull);
        CHECK(max_vertex_error(out.vertices, poly.vertices) <= 1e-12);
    }
}

TEST_CASE("recover examples") {
    const std::vector<int> ks{8, 16, 32, 64};
    std::vector<JointSpectrum> s2, pair;
    for (const int k : ks) {
        s2.push_back(toric_joint_spectrum({ToricName::S2, k}));
        pair.push_back(toric_joint_spectrum({ToricName::S2xS2, k}));
    }
    const RecoveryReport line = recover(s2);
    CHECK(line.recovered.dim == 1);
    CHECK(line.recovered.vertices.front().x == Rational(-1));
    CHECK(line.recovered.vertices.back().x == Rational(1));
    CHECK(line.delzant.delzant);
    CHECK(line.lattice_fits.size() == 4);

    const RecoveryReport sq = recover(pair);
    CHECK(sq.delzant.delzant);
    CHECK(max_vertex_error(sq.recovered.vertices_double(), square(1.0).vertices) <= 5e-3);
    CHECK(max_vertex_error(std::get<ConvexPolygon>(sq.extrapolation.hull).vertices, square(1.0).vertices) <= 5e-3);
    CHECK(sq.rounding_tolerance > 0.0);

    const std::vector<JointSpectrum> same(3, s2.front());
    CHECK_THROWS_AS(recover(same), InvalidArgument);

    std::vector<JointSpectrum> tampered = pair;
    tampered[1].points[3].multiplicity = 2;
    CHECK_THROWS_AS(recover(tampered), SimplicityViolation);
}
