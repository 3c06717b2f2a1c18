#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jointspec/convergence.hpp"
#include "jointspec/inverse.hpp"
#include "jointspec/spectrum.hpp"

namespace jointspec {

// Everything a run depends on. Empty paths mean "not requested", except
// `out`, whose absence sends the primary output to the given stream.
struct RunConfig {
    std::string command;
    std::string model;
    int n = 5;
    std::optional<int> k;
    std::vector<int> k_list;
    int t_max = 40;
    std::optional<int> trunc;        // jc: also run the full tensor build as a cross-check
    std::optional<double> window;    // classical: f1 <= window for noncompact systems
    std::optional<double> tol;       // recover: rounding tolerance override
    std::uint64_t seed = 0;          // jc/toric: seed of the random-combination cross-check
    std::string out;
    std::vector<std::string> in;
    std::string svg;                 // jc: optional scatter plot
    std::string samples;             // classical: optional samples CSV
    int resolution = 32;             // classical/converge: grid points per axis
};

// Throws InvalidArgument on k < 1, non-increasing k_list, non-positive
// tolerances, negative n / t_max, and unknown commands.
void validate(const RunConfig& config);

// Each command writes its primary artifact to `out` and a short human summary
// to `log`. Secondary files are written to the paths in the config.
JointSpectrum cmd_jc(const RunConfig& config, std::ostream& out, std::ostream& log);
JointSpectrum cmd_toric(const RunConfig& config, std::ostream& out, std::ostream& log);
ClassicalSpectrum cmd_classical(const RunConfig& config, std::ostream& out, std::ostream& log);
ConvergenceStudy cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& log);
RecoveryReport cmd_recover(const RunConfig& config, std::ostream& out, std::ostream& log);
std::string cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& log);

// Validates, dispatches on config.command, and routes the primary output to
// config.out (or `fallback` when empty).
void run(const RunConfig& config, std::ostream& fallback, std::ostream& log);

}  // namespace jointspec
