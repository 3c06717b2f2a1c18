#include "jointspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "jointspec/errors.hpp"

namespace jointspec {
namespace {

using Eigen::Index;

struct Eigenpairs {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // columns
};

Eigenpairs hermitian_eigen(const Matrix& a) {
    bool diagonal = true;
    for (Index j = 0; j < a.cols() && diagonal; ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (i != j && a(i, j) != Complex(0.0)) {
                diagonal = false;
                break;
            }
    if (diagonal) {
        const Index n = a.rows();
        std::vector<Index> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), Index{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](Index p, Index q) { return a(p, p).real() < a(q, q).real(); });
        Eigenpairs out{Eigen::VectorXd(n), Matrix::Zero(n, n)};
        for (Index c = 0; c < n; ++c) {
            out.values(c) = a(order[c], order[c]).real();
            out.vectors(order[c], c) = 1.0;
        }
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// Maximal runs of sorted values whose consecutive gaps are <= tol.
std::vector<std::pair<Index, Index>> gap_clusters(const Eigen::VectorXd& sorted, double tol) {
    std::vector<std::pair<Index, Index>> runs;
    Index start = 0;
    for (Index i = 1; i <= sorted.size(); ++i) {
        if (i == sorted.size() || sorted(i) - sorted(i - 1) > tol) {
            runs.emplace_back(start, i);
            start = i;
        }
    }
    return runs;
}

double max_residual(const CommutingFamily& family, const Matrix& basis,
                    const std::vector<double>& coords) {
    double worst = 0.0;
    for (std::size_t j = 0; j < family.size(); ++j) {
        const Matrix r = family.op(j).matrix() * basis - coords[j] * basis;
        worst = std::max(worst, r.colwise().norm().maxCoeff());
    }
    return worst;
}

struct Recursion {
    const CommutingFamily& family;
    double tol;
    JointSpectrum& out;

    // basis: dim x c orthonormal columns spanning a joint invariant subspace.
    void descend(std::size_t level, const Matrix& basis, std::vector<double>& coords) {
        if (level == family.size()) {
            out.points.push_back({coords, static_cast<int>(basis.cols())});
            out.residual = std::max(out.residual, max_residual(family, basis, coords));
            return;
        }
        const Matrix& t = family.op(level).matrix();
        const Matrix compressed =
            level == 0 ? t : Matrix(basis.adjoint() * t * basis);
        const Eigenpairs eig = hermitian_eigen(0.5 * (compressed + compressed.adjoint()));
        for (const auto& [lo, hi] : gap_clusters(eig.values, tol)) {
            const Index c = hi - lo;
            coords.push_back(eig.values.segment(lo, c).mean());
            const Matrix sub = eig.vectors.middleCols(lo, c);
            descend(level + 1, level == 0 ? sub : Matrix(basis * sub), coords);
            coords.pop_back();
        }
    }
};

void check_cluster_tol(const CommutingFamily& family, double tol) {
    if (!(tol > std::max(family.commute_tol(), 1e-12))) {
        std::ostringstream msg;
        msg << "cluster_tol " << tol << " must exceed max(commute_tol = " << family.commute_tol()
            << ", 1e-12)";
        throw ConfigurationError(msg.str());
    }
}

void check_residual(const JointSpectrum& js, double tol) {
    if (js.residual > 100.0 * tol) {
        std::ostringstream msg;
        msg << "joint eigenvector residual " << js.residual << " exceeds 100 x cluster_tol ("
            << tol << "): the family does not commute";
        throw NonCommuting(msg.str());
    }
}

bool lex_less(const JointPoint& a, const JointPoint& b) { return a.coords < b.coords; }

JointSpectrum block_points(const JCBlock& block, SemiclassicalParam param) {
    JointSpectrum part{param, 2, {}, 0.0};
    if (block.size() == 1) {
        part.points.push_back({{block.f1_value, 0.0}, 1});
        return part;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    const Eigen::VectorXd diag = Eigen::VectorXd::Zero(block.size());
    solver.computeFromTridiagonal(diag, block.f2_coupling, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw Error("tridiagonal eigensolver did not converge");
    const Eigen::MatrixXd b = block.f2_block();
    const Eigen::MatrixXd r = b * solver.eigenvectors() -
                              solver.eigenvectors() * solver.eigenvalues().asDiagonal();
    part.residual = r.colwise().norm().maxCoeff();
    // Off-diagonals are nonzero, so the tridiagonal spectrum is simple.
    for (Index i = 0; i < solver.eigenvalues().size(); ++i)
        part.points.push_back({{block.f1_value, solver.eigenvalues()(i)}, 1});
    return part;
}

}  // namespace

long JointSpectrum::total_multiplicity() const {
    long total = 0;
    for (const auto& p : points) total += p.multiplicity;
    return total;
}

PointCloud JointSpectrum::cloud() const {
    PointCloud c(static_cast<Index>(points.size()), dim);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (int j = 0; j < dim; ++j) c(static_cast<Index>(i), j) = points[i].coords[j];
    return c;
}

Hull JointSpectrum::hull() const { return hull_of(cloud()); }

void JointSpectrum::sort_points() { std::sort(points.begin(), points.end(), lex_less); }

double default_cluster_tol(const CommutingFamily& family) {
    double diameter2 = 0.0;
    for (const auto& op : family.ops()) {
        const Matrix& a = op.matrix();
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (Index i = 0; i < a.rows(); ++i) {
            const double radius = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
            lo = std::min(lo, a(i, i).real() - radius);
            hi = std::max(hi, a(i, i).real() + radius);
        }
        diameter2 += (hi - lo) * (hi - lo);
    }
    const double floor = 10.0 * std::max(family.commute_tol(), 1e-12);
    return std::max(1e-9 * std::sqrt(diameter2), floor);
}

JointSpectrum joint_spectrum(const CommutingFamily& family, std::optional<double> cluster_tol) {
    const double tol = cluster_tol.value_or(default_cluster_tol(family));
    check_cluster_tol(family, tol);
    JointSpectrum out{family.param(), static_cast<int>(family.size()), {}, 0.0};
    Recursion rec{family, tol, out};
    std::vector<double> coords;
    rec.descend(0, Matrix(), coords);
    out.sort_points();
    check_residual(out, tol);
    return out;
}

JointSpectrum random_combination_check(const CommutingFamily& family, std::uint64_t seed,
                                       std::optional<double> cluster_tol) {
    const double tol = cluster_tol.value_or(default_cluster_tol(family));
    check_cluster_tol(family, tol);
    const std::size_t d = family.size();

    for (int attempt = 0; attempt <= kMaxCollisionRetries; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
        std::normal_distribution<double> normal;
        std::vector<double> c(d);
        double norm = 0.0;
        for (auto& x : c) {
            x = normal(rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
        for (auto& x : c) x /= norm;
        if (d == 1) c[0] = 1.0;

        Matrix combo = Matrix::Zero(family.dim(), family.dim());
        for (std::size_t j = 0; j < d; ++j) combo += c[j] * family.op(j).matrix();
        const Eigenpairs eig = hermitian_eigen(0.5 * (combo + combo.adjoint()));

        JointSpectrum out{family.param(), static_cast<int>(d), {}, 0.0};
        bool collided = false;
        for (const auto& [lo, hi] : gap_clusters(eig.values, kCollisionTol)) {
            const Matrix basis = eig.vectors.middleCols(lo, hi - lo);
            std::vector<double> coords(d);
            for (std::size_t j = 0; j < d; ++j) {
                const Matrix proj = basis.adjoint() * family.op(j).matrix() * basis;
                const double mean = proj.diagonal().real().mean();
                // A group is a genuine joint degeneracy only if every T_j is scalar on it.
                const Matrix dev = proj - mean * Matrix::Identity(proj.rows(), proj.cols());
                if (max_abs(dev) > tol) collided = true;
                coords[j] = mean;
            }
            if (collided) break;
            out.points.push_back({coords, static_cast<int>(basis.cols())});
            out.residual = std::max(out.residual, max_residual(family, basis, coords));
        }
        if (collided) continue;
        out.sort_points();
        check_residual(out, tol);
        return out;
    }
    throw CollisionError("random_combination_check: eigenvalue collision persisted after " +
                         std::to_string(kMaxCollisionRetries) + " retries");
}

JointSpectrum product_spectrum(const JointSpectrum& a, const JointSpectrum& b) {
    if (a.param != b.param) throw ParameterMismatch("product_spectrum: different hbar");
    JointSpectrum out{a.param, a.dim + b.dim, {}, std::max(a.residual, b.residual)};
    out.points.reserve(a.points.size() * b.points.size());
    for (const auto& p : a.points)
        for (const auto& q : b.points) {
            JointPoint r{p.coords, p.multiplicity * q.multiplicity};
            r.coords.insert(r.coords.end(), q.coords.begin(), q.coords.end());
            out.points.push_back(std::move(r));
        }
    out.sort_points();
    return out;
}

JointSpectrum toric_joint_spectrum(const ToricModel& model) {
    const JointSpectrum s2 = joint_spectrum(toric_family({ToricName::S2, model.k}));
    if (model.name == ToricName::S2) return s2;
    return product_spectrum(s2, s2);
}

JointSpectrum jc_block_spectrum_serial(std::span<const JCBlock> blocks, int n) {
    const auto param = SemiclassicalParam::from_hbar(jc_hbar(n));
    JointSpectrum out{param, 2, {}, 0.0};
    for (const auto& block : blocks) {
        JointSpectrum part = block_points(block, param);
        out.residual = std::max(out.residual, part.residual);
        out.points.insert(out.points.end(), part.points.begin(), part.points.end());
    }
    out.sort_points();
    return out;
}

JointSpectrum jc_block_spectrum(std::span<const JCBlock> blocks, int n) {
    const auto param = SemiclassicalParam::from_hbar(jc_hbar(n));
    std::vector<JointSpectrum> parts(blocks.size());
    const auto count = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) parts[i] = block_points(blocks[i], param);

    JointSpectrum out{param, 2, {}, 0.0};
    for (auto& part : parts) {
        out.residual = std::max(out.residual, part.residual);
        out.points.insert(out.points.end(), part.points.begin(), part.points.end());
    }
    out.sort_points();
    return out;
}

}  // namespace jointspec
