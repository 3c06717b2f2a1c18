#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "jointspec/errors.hpp"
#include "jointspec/quantize.hpp"
#include "jointspec/spectrum.hpp"
#include "support/quadrature_oracle.hpp"

using namespace jointspec;
using namespace quadrature_oracle;

namespace {

std::vector<double> sorted_f2(const JointSpectrum& js, double f1_cut) {
    std::vector<double> out;
    for (const auto& p : js.points)
        if (p.coords[0] < f1_cut)
            for (int m = 0; m < p.multiplicity; ++m) out.push_back(p.coords[1]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("weyl_quantize examples") {
    const OscillatorAlgebra osc = oscillator(6, 1.0);
    CHECK(weyl_quantize(PolynomialSymbol::constant(1.0), osc).matrix() == Matrix::Identity(6, 6));

    const auto u = osc.position().matrix();
    const auto v = osc.momentum().matrix();
    const Matrix uv = 0.5 * (u * v + v * u);
    CHECK(max_abs(weyl_quantize(PolynomialSymbol::monomial(1, 1), osc).matrix() - uv) <= 1e-15);

    const auto h = weyl_quantize(PolynomialSymbol::monomial(2, 0, 0.5) + PolynomialSymbol::monomial(0, 2, 0.5), osc);
    for (int m = 0; m < 5; ++m) {
        CHECK(h(m, m).real() == doctest::Approx(m + 0.5).epsilon(1e-14));
        for (int c = 0; c < 5; ++c)
            if (c != m) CHECK(std::abs(h(m, c)) <= 1e-14);
    }
}

TEST_CASE("weyl_quantize is linear and exact on one-variable monomials") {
    const OscillatorAlgebra osc = oscillator(12, 0.3);
    const PolynomialSymbol p = PolynomialSymbol::monomial(2, 1, 0.7) + PolynomialSymbol::monomial(0, 3, -1.5);
    const PolynomialSymbol q = PolynomialSymbol::monomial(1, 1, 2.0) + PolynomialSymbol::monomial(4, 0, 0.25);
    const Matrix lhs = weyl_quantize(p + q, osc).matrix();
    const Matrix rhs = weyl_quantize(p, osc).matrix() + weyl_quantize(q, osc).matrix();
    CHECK(max_abs(lhs - rhs) <= 1e-14);

    Matrix power = Matrix::Identity(12, 12);
    for (int a = 1; a <= 5; ++a) {
        power = power * osc.position().matrix();
        CHECK(weyl_quantize(PolynomialSymbol::monomial(a, 0), osc).matrix() ==
              HermitianOperator(power, osc.param).matrix());
    }
}

TEST_CASE("weyl_quantize errors") {
    const OscillatorAlgebra osc = oscillator(12, 1.0);
    CHECK_THROWS_AS(weyl_quantize(PolynomialSymbol::monomial(5, 4), osc), DegreeCapExceeded);
    CHECK_THROWS_AS(weyl_quantize(PolynomialSymbol::monomial(2, 1), oscillator(3, 1.0)), TruncationTooSmall);
}

TEST_CASE("Jaynes-Cummings block examples") {
    const auto blocks = build_jaynes_cummings(1, 1);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].size() == 1);
    CHECK(blocks[0].f1_value == 0.0);
    CHECK(blocks[1].f1_value == 1.0);
    const Eigen::MatrixXd b1 = blocks[1].f2_block();
    CHECK(b1(0, 0) == 0.0);
    CHECK(b1(1, 0) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    const Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(b1).eigenvalues();
    CHECK(eig(0) == doctest::Approx(-0.35355339059327373).epsilon(1e-14));
    CHECK(eig(1) == doctest::Approx(0.35355339059327373).epsilon(1e-14));
}

TEST_CASE("Jaynes-Cummings blocks: sizes, zero diagonal, f1 progression") {
    for (const int n : {0, 1, 2, 5, 10}) {
        const double hbar = jc_hbar(n);
        const auto blocks = build_jaynes_cummings(n, 30);
        for (const auto& b : blocks) {
            CHECK(b.size() == std::min(b.T, n) + 1);
            CHECK(b.f2_block().diagonal().isZero(0.0));
            const double steps = b.f1_value / hbar - 0.5 * (1 - n);
            CHECK(std::abs(steps - std::round(steps)) <= 1e-12);
        }
    }
}

TEST_CASE("Jaynes-Cummings full build") {
    SUBCASE("n = 0 reduces to the oscillator") {
        const CommutingFamily f = jc_full_family(0, 6);
        CHECK(max_abs(f.op(1).matrix()) == 0.0);
        for (int m = 0; m < 6; ++m) CHECK(f.op(0)(m, m).real() == doctest::Approx(2.0 * (m + 0.5)));
    }
    SUBCASE("f1 and f2 commute on the represented states") {
        const CommutingFamily f = jc_full_family(2, 10);
        CHECK(commutator_norm(f.op(0), f.op(1)) <= 1e-12);
    }
    SUBCASE("interior blocks agree with the exact blocks") {
        for (int n = 1; n <= 3; ++n) {
            for (int trunc = n + 2; trunc <= 12; ++trunc) {
                const int t_int = trunc - n - 1;
                const auto blocks = build_jaynes_cummings(n, t_int);
                const JointSpectrum exact = jc_block_spectrum(blocks, n);
                const JointSpectrum full = joint_spectrum(jc_full_family(n, trunc));
                const double cut = jc_hbar(n) * (t_int + 0.5 * (1 - n) + 0.5);
                const auto a = sorted_f2(exact, cut);
                const auto b = sorted_f2(full, cut);
                CAPTURE(n);
                CAPTURE(trunc);
                REQUIRE(a.size() == b.size());
                for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("toeplitz_s2 examples") {
    const auto z2 = toeplitz_s2(SphereSymbol::z, 2);
    CHECK(z2.is_diagonal());
    CHECK(z2(0, 0).real() == 0.5);
    CHECK(z2(1, 1).real() == 0.0);
    CHECK(z2(2, 2).real() == -0.5);
    const auto z1 = toeplitz_s2(SphereSymbol::z, 1);
    CHECK(z1(0, 0).real() == 1.0 / 3.0);
    CHECK(z1(1, 1).real() == -1.0 / 3.0);
    // Zero trace: the diagonal is exactly antisymmetric under j <-> k - j.
    for (int k = 1; k <= 40; ++k) {
        const auto t = toeplitz_s2(SphereSymbol::z, k);
        for (int j = 0; j <= k; ++j) CHECK(t(j, j).real() == -t(k - j, k - j).real());
        CHECK(std::abs(t.matrix().trace()) <= 1e-14);
    }
    CHECK_THROWS_AS(toeplitz_s2(SphereSymbol::x, 0), InvalidArgument);
}

TEST_CASE("toeplitz_s2 z diagonal is the exact rational (k - 2j)/(k + 2)") {
    using boost::multiprecision::cpp_rational;
    for (int k = 1; k <= 64; ++k) {
        const auto t = toeplitz_s2(SphereSymbol::z, k);
        const double spacing = 2.0 / (k + 2);
        for (int j = 0; j <= k; ++j) {
            const cpp_rational exact(k - 2 * j, k + 2);
            CHECK(t(j, j).real() == exact.convert_to<double>());
            CHECK(t(j, j).real() == static_cast<double>(k - 2 * j) / static_cast<double>(k + 2));
            if (j > 0) CHECK(t(j - 1, j - 1).real() - t(j, j).real() == doctest::Approx(spacing).epsilon(1e-14));
        }
    }
}

TEST_CASE("toeplitz_s2 x closed form") {
    for (int k = 1; k <= 20; ++k) {
        const auto x = toeplitz_s2(SphereSymbol::x, k);
        for (int j = 0; j < k; ++j)
            CHECK(x(j + 1, j).real() ==
                  doctest::Approx(std::sqrt((j + 1.0) * (k - j)) / (k + 2)).epsilon(1e-14));
    }
}

TEST_CASE("toeplitz_s2 agrees with the quadrature oracle for k <= 8") {
    for (int k = 1; k <= 8; ++k) {
        CAPTURE(k);
        CHECK(max_abs(toeplitz_s2(SphereSymbol::x, k).matrix() - quadrature_toeplitz(sphere_x, k)) <= 1e-8);
        CHECK(max_abs(toeplitz_s2(SphereSymbol::y, k).matrix() - quadrature_toeplitz(sphere_y, k)) <= 1e-8);
        CHECK(max_abs(toeplitz_s2(SphereSymbol::z, k).matrix() - quadrature_toeplitz(sphere_z, k)) <= 1e-8);
    }
}

TEST_CASE("toeplitz_subprincipal") {
    for (int k : {3, 10}) {
        const auto base = toeplitz_s2(SphereSymbol::x, k);
        CHECK(toeplitz_subprincipal(SphereSymbol::x, k, SpherePolynomial{}).matrix() == base.matrix());
        const auto shifted = toeplitz_subprincipal(SphereSymbol::x, k, SpherePolynomial::constant(1.0));
        CHECK(max_abs(shifted.matrix() - base.matrix() - Matrix::Identity(k + 1, k + 1) / double(k)) <= 1e-15);
    }
    const auto zz = toeplitz_subprincipal(SphereSymbol::z, 4, SpherePolynomial::coordinate(SphereSymbol::z));
    for (int j = 0; j <= 4; ++j) CHECK(zz(j, j).real() == doctest::Approx((4.0 - 2 * j) / 6.0 * 1.25));
    SpherePolynomial cubic;
    cubic.terms[{1, 1, 1}] = 1.0;
    CHECK_THROWS_AS(toeplitz_subprincipal(SphereSymbol::z, 4, cubic), DegreeCapExceeded);
}

TEST_CASE("toric_family") {
    const CommutingFamily s2 = toric_family({ToricName::S2, 2});
    REQUIRE(s2.size() == 1);
    CHECK(s2.op(0).matrix() == toeplitz_s2(SphereSymbol::z, 2).matrix());

    const CommutingFamily pair = toric_family({ToricName::S2xS2, 2});
    REQUIRE(pair.size() == 2);
    CHECK(commutator_norm(pair.op(0), pair.op(1)) == 0.0);
    CHECK(pair.commute_tol() == 0.0);
    const JointSpectrum js = joint_spectrum(pair);
    CHECK(js.points.size() == 9);
    for (const auto& p : js.points) {
        CHECK(p.multiplicity == 1);
        for (const double c : p.coords) CHECK((c == 0.5 || c == 0.0 || c == -0.5));
    }
    CHECK_THROWS_AS(parse_toric_name("CP2"), InvalidArgument);
    CHECK_THROWS_AS(toric_family({ToricName::S2, 0}), InvalidArgument);
}
