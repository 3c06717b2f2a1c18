#include <algorithm>
#include <cmath>
#include <limits>

#include "jointspec/errors.hpp"
#include "jointspec/quantize.hpp"

namespace jointspec {
namespace {

// Round-off bound for max-entry commutators of two dense matrices whose exact
// commutator vanishes.
double roundoff_commute_tol(const HermitianOperator& a, const HermitianOperator& b) {
    return 8.0 * static_cast<double>(a.dim()) * std::numeric_limits<double>::epsilon() *
           max_abs(a.matrix()) * max_abs(b.matrix());
}

}  // namespace

double jc_hbar(int n) {
    if (n < 0) throw InvalidArgument("Jaynes-Cummings: n must be >= 0");
    return 2.0 / static_cast<double>(n + 1);
}

Eigen::MatrixXd JCBlock::f2_block() const {
    const Eigen::Index dim = size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i + 1 < dim; ++i) {
        m(i + 1, i) = f2_coupling(i);
        m(i, i + 1) = f2_coupling(i);
    }
    return m;
}

std::vector<JCBlock> build_jaynes_cummings(int n, int t_max) {
    if (t_max < 0) throw InvalidArgument("build_jaynes_cummings: t_max must be >= 0");
    const double hbar = jc_hbar(n);
    const double scale = 0.5 * hbar * std::sqrt(0.5 * hbar);
    std::vector<JCBlock> blocks(static_cast<std::size_t>(t_max) + 1);
    for (int T = 0; T <= t_max; ++T) {
        JCBlock& b = blocks[static_cast<std::size_t>(T)];
        b.T = T;
        b.f1_value = hbar * (T + 0.5 * (1 - n));
        const int top = std::min(T, n);
        b.f2_coupling.resize(top);
        // (j, m) -> (j+1, m-1): (hbar/2) sqrt(hbar/2) sqrt((j+1)(n-j)) sqrt(m), m = T - j
        for (int j = 0; j < top; ++j)
            b.f2_coupling(j) = scale * std::sqrt(static_cast<double>(j + 1) * (n - j)) *
                               std::sqrt(static_cast<double>(T - j));
    }
    return blocks;
}

CommutingFamily jc_full_family(int n, int osc_trunc) {
    if (osc_trunc < 1) throw InvalidArgument("jc_full_family: osc_trunc must be >= 1");
    const double hbar = jc_hbar(n);
    const SpinTriple spin = spin_triple(n, hbar);
    const OscillatorAlgebra osc = oscillator(osc_trunc, hbar);
    const auto param = spin.z_hat.param();

    const auto id_spin = HermitianOperator::identity(n + 1, param);
    const auto id_osc = HermitianOperator::identity(osc_trunc, param);
    // -hbar^2/2 d^2/du^2 + u^2/2 is hbar (N + 1/2) in the number basis.
    const HermitianOperator h_osc(hbar * (osc.number + 0.5 * Matrix::Identity(osc_trunc, osc_trunc)),
                                  param);

    HermitianOperator f1 = tensor(id_spin, h_osc) + tensor(spin.z_hat, id_osc);
    // The two-mode bilinear hbar/(2i)(a1 a2* - a2 a1*) is -y_hat.
    HermitianOperator f2 =
        (tensor(spin.x_hat, osc.position()) - tensor(spin.y_hat, osc.momentum())).scaled(0.5);
    const double tol = roundoff_commute_tol(f1, f2);
    return CommutingFamily({std::move(f1), std::move(f2)}, tol, jaynes_cummings_classical());
}

CommutingFamily jc_block_family(int n, int t_max) {
    const auto blocks = build_jaynes_cummings(n, t_max);
    const auto param = SemiclassicalParam::from_hbar(jc_hbar(n));
    Eigen::Index dim = 0;
    for (const auto& b : blocks) dim += b.size();
    Eigen::VectorXd f1_diag(dim);
    Matrix f2 = Matrix::Zero(dim, dim);
    Eigen::Index offset = 0;
    for (const auto& b : blocks) {
        f1_diag.segment(offset, b.size()).setConstant(b.f1_value);
        f2.block(offset, offset, b.size(), b.size()) = b.f2_block().cast<Complex>();
        offset += b.size();
    }
    HermitianOperator f1 = HermitianOperator::diagonal(f1_diag, param);
    HermitianOperator f2_op(f2, param);
    const double tol = roundoff_commute_tol(f1, f2_op);
    return CommutingFamily({std::move(f1), std::move(f2_op)}, tol, jaynes_cummings_classical());
}

}  // namespace jointspec
