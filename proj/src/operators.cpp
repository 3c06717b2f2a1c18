#include "jointspec/operators.hpp"

#include <cmath>
#include <string>

#include "jointspec/errors.hpp"

namespace jointspec {

SemiclassicalParam SemiclassicalParam::from_hbar(double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw InvalidArgument("hbar must be positive and finite");
    return {hbar, std::nullopt};
}

SemiclassicalParam SemiclassicalParam::from_k(int k) {
    if (k < 1) throw InvalidArgument("k must be >= 1, got " + std::to_string(k));
    return {1.0 / static_cast<double>(k), k};
}

HermitianOperator::HermitianOperator(const Matrix& entries, SemiclassicalParam param)
    : param_(param) {
    if (entries.rows() != entries.cols() || entries.rows() == 0)
        throw DimensionMismatch("HermitianOperator requires a non-empty square matrix");
    entries_ = 0.5 * (entries + entries.adjoint());
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim, SemiclassicalParam param) {
    return {Matrix::Identity(dim, dim), param};
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim, SemiclassicalParam param) {
    return {Matrix::Zero(dim, dim), param};
}

HermitianOperator HermitianOperator::diagonal(const Eigen::VectorXd& diag,
                                              SemiclassicalParam param) {
    Matrix m = Matrix::Zero(diag.size(), diag.size());
    m.diagonal() = diag.cast<Complex>();
    return {m, param};
}

bool HermitianOperator::is_diagonal() const {
    for (Eigen::Index j = 0; j < dim(); ++j)
        for (Eigen::Index i = 0; i < dim(); ++i)
            if (i != j && entries_(i, j) != Complex(0.0)) return false;
    return true;
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
    if (other.param_ != param_) throw ParameterMismatch("operator sum with different hbar");
    if (other.dim() != dim()) throw DimensionMismatch("operator sum with different dimensions");
    return {entries_ + other.entries_, param_};
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
    return *this + other.scaled(-1.0);
}

HermitianOperator HermitianOperator::scaled(double factor) const {
    return {factor * entries_, param_};
}

SpinTriple spin_triple(int n, double hbar) {
    if (n < 0) throw InvalidArgument("spin_triple: n must be >= 0");
    auto param = SemiclassicalParam::from_hbar(hbar);
    const Eigen::Index dim = n + 1;
    Matrix x = Matrix::Zero(dim, dim);
    Matrix y = Matrix::Zero(dim, dim);
    Matrix z = Matrix::Zero(dim, dim);
    for (int j = 0; j <= n; ++j) {
        // N1 = j, N2 = n - j; z = hbar/2 (N1 - N2). Normal ordering of a1 a1*
        // and a2 a2* only adds the same constant to both terms.
        z(j, j) = hbar * (j - 0.5 * n);
        if (j < n) {
            // <j+1| a1* a2 |j> = sqrt((j+1)(n-j))
            const double c = 0.5 * hbar * std::sqrt(static_cast<double>(j + 1) * (n - j));
            x(j + 1, j) = c;
            x(j, j + 1) = c;
            y(j + 1, j) = Complex(0.0, -c);
            y(j, j + 1) = Complex(0.0, c);
        }
    }
    return {HermitianOperator(x, param), HermitianOperator(y, param), HermitianOperator(z, param),
            n};
}

OscillatorAlgebra oscillator(int trunc, double hbar) {
    if (trunc < 1) throw InvalidArgument("oscillator: trunc must be >= 1");
    OscillatorAlgebra osc;
    osc.trunc = trunc;
    osc.param = SemiclassicalParam::from_hbar(hbar);
    osc.lower = Matrix::Zero(trunc, trunc);
    for (int m = 1; m < trunc; ++m) osc.lower(m - 1, m) = std::sqrt(static_cast<double>(m));
    osc.raise = osc.lower.adjoint();
    osc.number = Matrix::Zero(trunc, trunc);
    for (int m = 0; m < trunc; ++m) osc.number(m, m) = static_cast<double>(m);
    return osc;
}

HermitianOperator OscillatorAlgebra::position() const {
    return {std::sqrt(param.hbar / 2.0) * (lower + raise), param};
}

HermitianOperator OscillatorAlgebra::momentum() const {
    return {Complex(0.0, -std::sqrt(param.hbar / 2.0)) * (lower - raise), param};
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.param() != b.param()) throw ParameterMismatch("tensor: operands carry different hbar");
    const Eigen::Index da = a.dim();
    const Eigen::Index db = b.dim();
    Matrix out = Matrix::Zero(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0)) continue;
            out.block(i * db, j * db, db, db) = aij * b.matrix();
        }
    return {out, a.param()};
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double commutator_norm(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("commutator_norm: dimension mismatch");
    const Matrix ab = a.matrix() * b.matrix();
    // ba = (ab)* for Hermitian a, b.
    return max_abs(ab - ab.adjoint());
}

}  // namespace jointspec
