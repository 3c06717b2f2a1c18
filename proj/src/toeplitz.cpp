#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "jointspec/errors.hpp"
#include "jointspec/quantize.hpp"

namespace jointspec {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr int kSphereDegreeCap = 8;

// m! / n! as an exact rational.
cpp_rational factorial_ratio(long m, long n) {
    cpp_int prod = 1;
    for (long i = std::min(m, n) + 1; i <= std::max(m, n); ++i) prod *= i;
    return m >= n ? cpp_rational(prod) : cpp_rational(cpp_int(1), prod);
}

// B(a, b) / B(c, d) for positive integer arguments, B(a, b) = (a-1)!(b-1)!/(a+b-1)!.
cpp_rational beta_ratio(long a, long b, long c, long d) {
    return factorial_ratio(a - 1, c - 1) * factorial_ratio(b - 1, d - 1) *
           factorial_ratio(c + d - 1, a + b - 1);
}

double to_double(const cpp_rational& r) {
    const cpp_int num = boost::multiprecision::numerator(r);
    const cpp_int den = boost::multiprecision::denominator(r);
    static const cpp_int exact_limit = cpp_int(1) << 53;
    if (boost::multiprecision::abs(num) <= exact_limit && den <= exact_limit)
        return num.convert_to<double>() / den.convert_to<double>();
    return r.convert_to<double>();
}

cpp_int binomial(int n, int r) {
    cpp_int out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

// Exact complex rational.
struct CRational {
    cpp_rational re = 0;
    cpp_rational im = 0;
};

// Expansion of x^a y^b z^c on the affine chart w, with t = |w|^2:
//   x = (w + conj w)/(1+t),  y = -i (w - conj w)/(1+t),  z = (1-t)/(1+t).
// Entry: (p, q, r) -> coefficient of w^p conj(w)^q t^r (1+t)^{-(a+b+c)}.
struct ChartTerm {
    int p, q, r;
    CRational coeff;
};

std::vector<ChartTerm> expand_monomial(int a, int b, int c) {
    // (-i)^b
    static const int re_pow[4] = {1, 0, -1, 0};
    static const int im_pow[4] = {0, -1, 0, 1};
    const int phase_re = re_pow[b % 4];
    const int phase_im = im_pow[b % 4];

    std::vector<ChartTerm> out;
    for (int p1 = 0; p1 <= a; ++p1)
        for (int p2 = 0; p2 <= b; ++p2)
            for (int r = 0; r <= c; ++r) {
                cpp_int mag = binomial(a, p1) * binomial(b, p2) * binomial(c, r);
                if ((b - p2 + r) % 2 == 1) mag = -mag;
                ChartTerm t{p1 + p2, a + b - p1 - p2, r, {}};
                t.coeff.re = cpp_rational(mag * phase_re);
                t.coeff.im = cpp_rational(mag * phase_im);
                out.push_back(std::move(t));
            }
    return out;
}

}  // namespace

SphereSymbol parse_sphere_symbol(const std::string& name) {
    if (name == "x") return SphereSymbol::x;
    if (name == "y") return SphereSymbol::y;
    if (name == "z") return SphereSymbol::z;
    throw InvalidArgument("unknown sphere symbol '" + name + "'");
}

SpherePolynomial SpherePolynomial::constant(double c) {
    SpherePolynomial p;
    p.terms[{0, 0, 0}] = c;
    return p;
}

SpherePolynomial SpherePolynomial::coordinate(SphereSymbol s, double c) {
    SpherePolynomial p;
    std::array<int, 3> e{0, 0, 0};
    e[static_cast<std::size_t>(s)] = 1;
    p.terms[e] = c;
    return p;
}

int SpherePolynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms)
        if (c != 0.0) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

HermitianOperator toeplitz_sphere(const SpherePolynomial& symbol, int k) {
    if (k < 1) throw InvalidArgument("Toeplitz operators need k >= 1");
    if (symbol.degree() > kSphereDegreeCap)
        throw DegreeCapExceeded("toeplitz_sphere: degree cap is " + std::to_string(kSphereDegreeCap));

    const int dim = k + 1;
    Matrix out = Matrix::Zero(dim, dim);
    for (const auto& [exps, coeff] : symbol.terms) {
        if (coeff == 0.0) continue;
        const auto [a, b, c] = exps;
        const int s = a + b + c;
        const auto terms = expand_monomial(a, b, c);
        // <e_i, f e_j>, e_j = w^j / sqrt(N_j), N_j = pi B(j+1, k-j+1).
        for (int j = 0; j <= k; ++j) {
            std::vector<CRational> column(static_cast<std::size_t>(dim));
            std::vector<bool> touched(static_cast<std::size_t>(dim), false);
            for (const auto& t : terms) {
                const int i = j + t.p - t.q;
                if (i < 0 || i > k) continue;
                // pi * int_0^inf t^{j+p+r} (1+t)^{-(k+2+s)} dt = pi B(j+p+r+1, k+1+s-j-p-r)
                const long alpha = j + t.p + t.r + 1;
                const long beta = k + 1 + s - j - t.p - t.r;
                const cpp_rational ratio = beta_ratio(alpha, beta, j + 1, k - j + 1);
                auto& cell = column[static_cast<std::size_t>(i)];
                cell.re += t.coeff.re * ratio;
                cell.im += t.coeff.im * ratio;
                touched[static_cast<std::size_t>(i)] = true;
            }
            for (int i = 0; i <= k; ++i) {
                if (!touched[static_cast<std::size_t>(i)]) continue;
                const auto& cell = column[static_cast<std::size_t>(i)];
                // sqrt(N_j / N_i); identically 1 on the diagonal.
                const double norm =
                    i == j ? 1.0 : std::sqrt(to_double(beta_ratio(j + 1, k - j + 1, i + 1, k - i + 1)));
                out(i, j) += coeff * Complex(to_double(cell.re) * norm, to_double(cell.im) * norm);
            }
        }
    }
    return {out, SemiclassicalParam::from_k(k)};
}

HermitianOperator toeplitz_s2(SphereSymbol symbol, int k) {
    return toeplitz_sphere(SpherePolynomial::coordinate(symbol), k);
}

HermitianOperator toeplitz_subprincipal(SphereSymbol symbol, int k,
                                        const SpherePolynomial& correction) {
    if (correction.degree() > 2)
        throw DegreeCapExceeded("toeplitz_subprincipal: correction degree must be <= 2");
    return toeplitz_s2(symbol, k) + toeplitz_sphere(correction, k).scaled(1.0 / k);
}

ToricName parse_toric_name(const std::string& name) {
    if (name == "S2") return ToricName::S2;
    if (name == "S2xS2") return ToricName::S2xS2;
    throw InvalidArgument("unknown toric model '" + name + "' (expected S2 or S2xS2)");
}

std::string to_string(ToricName name) { return name == ToricName::S2 ? "S2" : "S2xS2"; }

CommutingFamily toric_family(const ToricModel& model) {
    if (model.k < 1) throw InvalidArgument("toric model needs k >= 1");
    const HermitianOperator tz = toeplitz_s2(SphereSymbol::z, model.k);
    if (model.name == ToricName::S2) return CommutingFamily({tz}, 0.0, sphere_height());
    const auto id = HermitianOperator::identity(tz.dim(), tz.param());
    return CommutingFamily({tensor(tz, id), tensor(id, tz)}, 0.0, sphere_pair());
}

}  // namespace jointspec
