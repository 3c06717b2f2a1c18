#include "jointspec/convergence.hpp"

#include <cmath>
#include <exception>

#include <Eigen/Dense>

#include "jointspec/errors.hpp"

namespace jointspec {
namespace {

void validate_k_list(std::span<const int> k_list) {
    if (k_list.size() < 4) throw InvalidArgument("convergence study needs at least 4 k values");
    for (std::size_t i = 0; i < k_list.size(); ++i) {
        if (k_list[i] < 1) throw InvalidArgument("k values must be >= 1");
        if (i > 0 && k_list[i] <= k_list[i - 1])
            throw InvalidArgument("k values must be strictly increasing (hbar strictly decreasing)");
    }
}

ConvergenceRow run_one(const SpectrumFactory& quantum, const Hull& classical, int k) {
    const JointSpectrum js = quantum(k);
    const double d = hausdorff(js.hull(), classical);
    if (!std::isfinite(d)) throw NonFinite("non-finite Hausdorff distance at k = " + std::to_string(k));
    return {k, js.param.hbar, d};
}

ConvergenceStudy finish(std::vector<ConvergenceRow> rows) {
    std::vector<double> lx, ly;
    for (const auto& r : rows) {
        if (!(r.distance > 0.0))
            throw NonFinite("zero Hausdorff distance at k = " + std::to_string(r.k) +
                            ": log-log fit undefined");
        lx.push_back(std::log(r.hbar));
        ly.push_back(std::log(r.distance));
    }
    // log d = alpha log hbar + c + beta hbar: the beta term absorbs the
    // first-order correction that biases a plain power-law fit at moderate k.
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a.row(i) << lx[i], 1.0, rows[i].hbar;
        b(i) = ly[i];
    }
    const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
    ConvergenceStudy study{std::move(rows), coef(0), coef(1), coef(2), 0.0};
    study.raw_exponent = fit_line(lx, ly).slope;
    return study;
}

}  // namespace

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("fit_line: need >= 2 pairs");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw InvalidArgument("fit_line: x values are all equal");
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

ConvergenceStudy convergence_study_serial(const SpectrumFactory& quantum, const Hull& classical,
                                          std::span<const int> k_list) {
    validate_k_list(k_list);
    std::vector<ConvergenceRow> rows;
    for (const int k : k_list) rows.push_back(run_one(quantum, classical, k));
    return finish(std::move(rows));
}

ConvergenceStudy convergence_study(const SpectrumFactory& quantum, const Hull& classical,
                                   std::span<const int> k_list) {
    validate_k_list(k_list);
    std::vector<ConvergenceRow> rows(k_list.size());
    std::vector<std::exception_ptr> errors(k_list.size());
    const auto count = static_cast<std::int64_t>(k_list.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            rows[i] = run_one(quantum, classical, k_list[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return finish(std::move(rows));
}

ConvergenceStudy convergence_study(ToricName model, std::span<const int> k_list,
                                   GridResolution grid) {
    const ClassicalSystem sys = model == ToricName::S2 ? sphere_height() : sphere_pair();
    const Hull classical = classical_spectrum(sys, grid).hull;
    return convergence_study(
        [model](int k) { return toric_joint_spectrum({model, k}); }, classical, k_list);
}

}  // namespace jointspec
