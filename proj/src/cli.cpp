#include "jointspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jointspec/errors.hpp"
#include "jointspec/io.hpp"

namespace jointspec {
namespace {

constexpr Eigen::Index kOracleMaxDim = 500;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw IoError("write to '" + path + "' failed");
}

ToricName toric_model(const RunConfig& c) {
    if (c.model.empty()) throw InvalidArgument("--model is required (S2 or S2xS2)");
    return parse_toric_name(c.model);
}

int required_k(const RunConfig& c) {
    if (!c.k) throw InvalidArgument("--k is required");
    return *c.k;
}

std::vector<int> k_list_or_default(const RunConfig& c) {
    return c.k_list.empty() ? std::vector<int>{4, 8, 16, 32, 64} : c.k_list;
}

void report_oracle(const CommutingFamily& family, const JointSpectrum& js, std::uint64_t seed,
                   std::ostream& log) {
    if (family.dim() > kOracleMaxDim) return;
    const JointSpectrum check = random_combination_check(family, seed);
    log << "oracle: hausdorff(joint, random combination seed " << seed
        << ") = " << format_double(hausdorff(js.cloud(), check.cloud())) << '\n';
}

// Full tensor build against the exact blocks on the subspaces it represents
// without truncation error.
void report_full_build(const RunConfig& c, const JointSpectrum& blocks, std::ostream& log) {
    const int trunc = *c.trunc;
    const int t_interior = std::min(c.t_max, trunc - c.n - 1);
    if (t_interior < 0)
        throw TruncationTooSmall("--trunc " + std::to_string(trunc) + " leaves no exact block for n = " +
                                 std::to_string(c.n));
    const CommutingFamily full = jc_full_family(c.n, trunc);
    const JointSpectrum fs = joint_spectrum(full);
    const double hbar = jc_hbar(c.n);
    const double cut = hbar * (t_interior + 0.5 * (1 - c.n)) + 0.5 * hbar;

    auto restrict_cloud = [cut](const JointSpectrum& js) {
        std::vector<const JointPoint*> kept;
        for (const auto& p : js.points)
            if (p.coords[0] < cut) kept.push_back(&p);
        PointCloud cloud(static_cast<Eigen::Index>(kept.size()), 2);
        for (Eigen::Index i = 0; i < cloud.rows(); ++i)
            cloud.row(i) << kept[i]->coords[0], kept[i]->coords[1];
        return cloud;
    };
    log << "full build: trunc " << trunc << ", blocks T <= " << t_interior
        << ", hausdorff = " << format_double(hausdorff(restrict_cloud(blocks), restrict_cloud(fs)))
        << '\n';
}

}  // namespace

void validate(const RunConfig& c) {
    static const std::vector<std::string> commands{"jc", "toric", "classical", "converge", "recover", "plot"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
        throw InvalidArgument("unknown command '" + c.command + "'");
    if (c.n < 0) throw InvalidArgument("--n must be >= 0");
    if (c.t_max < 0) throw InvalidArgument("--t-max must be >= 0");
    if (c.k && *c.k < 1) throw InvalidArgument("--k must be >= 1, got " + std::to_string(*c.k));
    if (c.trunc && *c.trunc < 1) throw InvalidArgument("--trunc must be >= 1");
    for (std::size_t i = 0; i < c.k_list.size(); ++i) {
        if (c.k_list[i] < 1) throw InvalidArgument("--k-list entries must be >= 1");
        if (i > 0 && c.k_list[i] <= c.k_list[i - 1])
            throw InvalidArgument("--k-list must be strictly increasing");
    }
    if (c.tol && !(*c.tol > 0.0)) throw InvalidArgument("--tol must be positive");
    if (c.window && !std::isfinite(*c.window)) throw InvalidArgument("--window must be finite");
    if (c.resolution < 16) throw InvalidArgument("--res must be >= 16");
}

JointSpectrum cmd_jc(const RunConfig& c, std::ostream& out, std::ostream& log) {
    const auto blocks = build_jaynes_cummings(c.n, c.t_max);
    const JointSpectrum js = jc_block_spectrum(blocks, c.n);
    write_spectrum_csv(out, js);
    log << "jc: n " << c.n << ", hbar " << format_double(js.param.hbar) << ", " << js.points.size()
        << " joint points in " << blocks.size() << " blocks\n";
    report_oracle(jc_block_family(c.n, c.t_max), js, c.seed, log);
    if (c.trunc) report_full_build(c, js, log);
    if (!c.svg.empty()) write_file(c.svg, render_spectrum_svg(js));
    return js;
}

JointSpectrum cmd_toric(const RunConfig& c, std::ostream& out, std::ostream& log) {
    const ToricModel model{toric_model(c), required_k(c)};
    const JointSpectrum js = toric_joint_spectrum(model);
    write_spectrum_csv(out, js);
    log << "toric: " << to_string(model.name) << ", k " << model.k << ", " << js.points.size()
        << " joint points\n";
    const LatticeFit fit = fit_lattice(js);
    log << "lattice: spacing";
    for (const double s : fit.spacing) log << ' ' << format_double(s);
    log << ", residual " << format_double(fit.residual) << '\n';
    const Eigen::Index dim = static_cast<Eigen::Index>(js.total_multiplicity());
    if (dim <= kOracleMaxDim) report_oracle(toric_family(model), js, c.seed, log);
    return js;
}

ClassicalSpectrum cmd_classical(const RunConfig& c, std::ostream& out, std::ostream& log) {
    if (c.model.empty()) throw InvalidArgument("--model is required (S2, S2xS2 or JC)");
    const ClassicalSystem sys = classical_system(c.model);
    const ClassicalSpectrum spec =
        classical_spectrum(sys, {c.resolution, c.resolution}, c.window);
    out << hull_json(spec.hull).dump(2) << '\n';
    log << "classical: " << sys.name << ", " << spec.samples.rows() << " samples\n";
    if (!c.samples.empty()) {
        std::ostringstream csv;
        write_samples_csv(csv, spec.samples);
        write_file(c.samples, csv.str());
    }
    return spec;
}

ConvergenceStudy cmd_converge(const RunConfig& c, std::ostream& out, std::ostream& log) {
    const ToricName model = toric_model(c);
    const auto ks = k_list_or_default(c);
    if (ks.size() < 4) throw InvalidArgument("converge needs at least 4 k values");
    const ConvergenceStudy study = convergence_study(model, ks, {c.resolution, c.resolution});
    write_convergence_csv(out, study);
    log << "converge: " << to_string(model) << ", alpha " << format_double(study.exponent)
        << " (plain power-law fit " << format_double(study.raw_exponent) << ")\n";
    return study;
}

RecoveryReport cmd_recover(const RunConfig& c, std::ostream& out, std::ostream& log) {
    if (c.in.size() < 3)
        throw InvalidArgument("recover needs at least 3 --in spectra, got " + std::to_string(c.in.size()));
    std::vector<JointSpectrum> spectra;
    for (const auto& path : c.in) spectra.push_back(read_spectrum_csv_file(path));
    RecoveryOptions options;
    options.rounding_tolerance = c.tol;
    const RecoveryReport report = recover(spectra, options);
    out << polytope_json(report).dump(2) << '\n';
    log << "recover: " << report.recovered.vertices.size() << " vertices, delzant "
        << (report.delzant.delzant ? "true" : "false") << ", extrapolation residual "
        << format_double(report.extrapolation.residual) << '\n';
    return report;
}

std::string cmd_plot(const RunConfig& c, std::ostream& out, std::ostream& log) {
    if (c.in.size() != 1) throw InvalidArgument("plot needs exactly one --in spectrum");
    const JointSpectrum js = read_spectrum_csv_file(c.in.front());
    if (js.dim != 1 && js.dim != 2) throw DimensionMismatch("plot supports d = 1 or 2");
    const std::string svg = render_spectrum_svg(js);
    out << svg;
    log << "plot: " << js.points.size() << " points\n";
    return svg;
}

void run(const RunConfig& c, std::ostream& fallback, std::ostream& log) {
    validate(c);
    std::ostringstream buffer;
    std::ostream& out = c.out.empty() ? fallback : buffer;
    if (c.command == "jc") cmd_jc(c, out, log);
    else if (c.command == "toric") cmd_toric(c, out, log);
    else if (c.command == "classical") cmd_classical(c, out, log);
    else if (c.command == "converge") cmd_converge(c, out, log);
    else if (c.command == "recover") cmd_recover(c, out, log);
    else cmd_plot(c, out, log);
    // Written only after the command succeeded, so failures leave no partial file.
    if (!c.out.empty()) write_file(c.out, buffer.str());
}

}  // namespace jointspec
