#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jointspec/family.hpp"
#include "jointspec/operators.hpp"

namespace jointspec {

// ---------------------------------------------------------------------------
// Weyl quantization of polynomial symbols in one canonical pair (u, v).

inline constexpr int kWeylDegreeCap = 8;

// Map (exponent of u, exponent of v) -> real coefficient.
struct PolynomialSymbol {
    std::map<std::pair<int, int>, double> terms;

    static PolynomialSymbol constant(double c);
    static PolynomialSymbol monomial(int u_exp, int v_exp, double c = 1.0);

    int degree() const;
    PolynomialSymbol operator+(const PolynomialSymbol& other) const;
};

// Fully symmetrized ordering: each monomial u^a v^b becomes the average over
// the (a+b)!/(a! b!) distinct words in a copies of u-hat and b copies of v-hat.
HermitianOperator weyl_quantize(const PolynomialSymbol& symbol, const OscillatorAlgebra& osc);

// ---------------------------------------------------------------------------
// Jaynes-Cummings model, hbar fixed by 2 = hbar (n + 1).

double jc_hbar(int n);

// Block of the conserved total excitation T = m + j (oscillator quanta plus
// spin index). Basis (j, m = T - j), j = 0 .. min(n, T).
struct JCBlock {
    int T = 0;
    double f1_value = 0.0;      // hbar (T + (1 - n)/2)
    Eigen::VectorXd f2_coupling;  // sub-diagonal of the zero-diagonal tridiagonal f2 block

    Eigen::Index size() const { return f2_coupling.size() + 1; }
    Eigen::MatrixXd f2_block() const;
};

std::vector<JCBlock> build_jaynes_cummings(int n, int t_max);

// Full tensor-product build on C^{n+1} (x) C^{osc_trunc}; index j * osc_trunc + m.
CommutingFamily jc_full_family(int n, int osc_trunc);

// Direct sum of the exact blocks T = 0 .. t_max as one dense family.
CommutingFamily jc_block_family(int n, int t_max);

// ---------------------------------------------------------------------------
// Berezin-Toeplitz operators on S2 in the monomial section basis w^j,
// j = 0 .. k, from closed-form Beta-function integrals.

enum class SphereSymbol { x, y, z };

SphereSymbol parse_sphere_symbol(const std::string& name);

// Polynomial in the ambient coordinates (x, y, z) of the unit sphere.
struct SpherePolynomial {
    std::map<std::array<int, 3>, double> terms;

    static SpherePolynomial constant(double c);
    static SpherePolynomial coordinate(SphereSymbol s, double c = 1.0);

    int degree() const;
};

HermitianOperator toeplitz_s2(SphereSymbol symbol, int k);
HermitianOperator toeplitz_sphere(const SpherePolynomial& symbol, int k);

// T_{f0} + k^{-1} T_{f1}; the correction must have degree <= 2.
HermitianOperator toeplitz_subprincipal(SphereSymbol symbol, int k,
                                        const SpherePolynomial& correction);

enum class ToricName { S2, S2xS2 };

struct ToricModel {
    ToricName name = ToricName::S2;
    int k = 1;

    int moment_dim() const { return name == ToricName::S2 ? 1 : 2; }
};

ToricName parse_toric_name(const std::string& name);
std::string to_string(ToricName name);

// S2 -> (T_z); S2xS2 -> (T_z (x) Id, Id (x) T_z).
CommutingFamily toric_family(const ToricModel& model);

}  // namespace jointspec
