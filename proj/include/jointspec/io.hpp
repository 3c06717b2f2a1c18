#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "jointspec/classical.hpp"
#include "jointspec/convergence.hpp"
#include "jointspec/inverse.hpp"
#include "jointspec/spectrum.hpp"

namespace jointspec {

// 17 significant digits: lossless for IEEE doubles.
std::string format_double(double x);

// Spectrum CSV: header `hbar,lambda1[,lambda2],multiplicity`, one row per
// distinct joint point.
void write_spectrum_csv(std::ostream& os, const JointSpectrum& js);
// Identical coordinate rows are merged by summing multiplicities. Errors carry
// the source name and line number. A header-only file yields an empty
// spectrum with a default-constructed param.
JointSpectrum read_spectrum_csv(std::istream& is, const std::string& source = "<stream>");
JointSpectrum read_spectrum_csv_file(const std::string& path);

// Classical samples: header `f1[,f2]`.
void write_samples_csv(std::ostream& os, const PointCloud& samples);

// Convergence table: `k,hbar,hausdorff` rows and a `# alpha=...,intercept=...` footer.
void write_convergence_csv(std::ostream& os, const ConvergenceStudy& study);

nlohmann::json hull_json(const Hull& hull);

// { "dim", "vertices", "edge_normals", "delzant", "residuals", "certificates" }
nlohmann::json polytope_json(const RecoveryReport& report);
nlohmann::json polytope_json(const Polytope& polytope, const DelzantReport& delzant);

// Self-contained SVG scatter plot; marker radius grows with multiplicity.
// d = 1 spectra are drawn as a strip.
std::string render_spectrum_svg(const JointSpectrum& js);

}  // namespace jointspec
