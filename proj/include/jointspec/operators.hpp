#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace jointspec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Semiclassical parameter. Toric models are labelled by an integer k and
// carry hbar = 1/k; other models (Jaynes-Cummings) carry hbar only.
struct SemiclassicalParam {
    double hbar = 1.0;
    std::optional<int> k;

    static SemiclassicalParam from_hbar(double hbar);
    static SemiclassicalParam from_k(int k);

    friend bool operator==(const SemiclassicalParam&, const SemiclassicalParam&) = default;
};

// Dense self-adjoint matrix. The constructor stores (A + A*)/2, so the
// stored entries are exactly Hermitian regardless of input round-off.
class HermitianOperator {
public:
    HermitianOperator(const Matrix& entries, SemiclassicalParam param);

    static HermitianOperator identity(Eigen::Index dim, SemiclassicalParam param);
    static HermitianOperator zero(Eigen::Index dim, SemiclassicalParam param);
    static HermitianOperator diagonal(const Eigen::VectorXd& diag, SemiclassicalParam param);

    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix& matrix() const { return entries_; }
    const SemiclassicalParam& param() const { return param_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

    bool is_diagonal() const;
    Eigen::VectorXd real_diagonal() const { return entries_.diagonal().real(); }

    HermitianOperator operator+(const HermitianOperator& other) const;
    HermitianOperator operator-(const HermitianOperator& other) const;
    HermitianOperator scaled(double factor) const;

private:
    Matrix entries_;
    SemiclassicalParam param_;
};

// Spin operators on the (n+1)-dimensional total-occupation-n subspace of
// two bosonic modes. Basis index j is the occupation of mode 1.
struct SpinTriple {
    HermitianOperator x_hat;
    HermitianOperator y_hat;
    HermitianOperator z_hat;
    int n = 0;
};

struct OscillatorAlgebra {
    int trunc = 1;
    Matrix lower;
    Matrix raise;
    Matrix number;
    SemiclassicalParam param;

    // u = sqrt(hbar/2) (lower + raise)
    HermitianOperator position() const;
    // v = -i sqrt(hbar/2) (lower - raise)
    HermitianOperator momentum() const;
};

// Schwinger realization. x_hat and z_hat are the two-mode bilinears
// hbar/2 (a1 a2* + a2 a1*) and hbar/2 (N1 - N2); y_hat is oriented so that
// [x, y] = i hbar z. The bilinear hbar/(2i)(a1 a2* - a2 a1*) equals -y_hat.
SpinTriple spin_triple(int n, double hbar);

OscillatorAlgebra oscillator(int trunc, double hbar);

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

// Max-entry absolute value of ab - ba.
double commutator_norm(const HermitianOperator& a, const HermitianOperator& b);

double max_abs(const Matrix& m);

}  // namespace jointspec
