#pragma once

#include <functional>
#include <span>
#include <vector>

#include "jointspec/classical.hpp"
#include "jointspec/spectrum.hpp"

namespace jointspec {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

struct ConvergenceRow {
    int k = 0;
    double hbar = 0.0;
    double distance = 0.0;  // d_H(hull of joint spectrum, hull of classical spectrum)
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    // Least squares log d_H = alpha log hbar + c + beta hbar.
    double exponent = 0.0;      // alpha
    double intercept = 0.0;     // c
    double correction = 0.0;    // beta
    double raw_exponent = 0.0;  // slope of the plain fit log d_H = alpha log hbar + c
};

using SpectrumFactory = std::function<JointSpectrum(int k)>;

// Per-k runs are independent and execute in an OpenMP loop; the factory must be
// safe to call concurrently. k_list must be strictly increasing (hbar = 1/k
// strictly decreasing) with at least 4 entries.
ConvergenceStudy convergence_study(const SpectrumFactory& quantum, const Hull& classical,
                                   std::span<const int> k_list);
ConvergenceStudy convergence_study_serial(const SpectrumFactory& quantum, const Hull& classical,
                                          std::span<const int> k_list);

// Toric catalog model against its sampled classical spectrum.
ConvergenceStudy convergence_study(ToricName model, std::span<const int> k_list,
                                   GridResolution grid = {});

}  // namespace jointspec
