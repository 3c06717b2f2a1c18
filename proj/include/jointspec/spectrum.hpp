#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jointspec/family.hpp"
#include "jointspec/geometry.hpp"
#include "jointspec/quantize.hpp"

namespace jointspec {

struct JointPoint {
    std::vector<double> coords;
    int multiplicity = 1;

    friend bool operator==(const JointPoint&, const JointPoint&) = default;
};

// Finite joint spectrum: distinct joint eigenvalue tuples with multiplicities,
// sorted lexicographically by coordinates.
struct JointSpectrum {
    SemiclassicalParam param;
    int dim = 1;
    std::vector<JointPoint> points;
    double residual = 0.0;  // max ||T_j v - lambda_j v||_2 over the emitted eigenvectors

    long total_multiplicity() const;
    // One row per distinct point.
    PointCloud cloud() const;
    Hull hull() const;
    void sort_points();
};

// 1e-9 times a Gershgorin estimate of the joint spectral diameter, kept
// strictly above max(commute_tol, 1e-12).
double default_cluster_tol(const CommutingFamily& family);

// Recursive simultaneous diagonalization: diagonalize T_1, split the spectrum
// into gap-separated clusters, compress T_2 to each cluster eigenspace, recurse.
JointSpectrum joint_spectrum(const CommutingFamily& family,
                             std::optional<double> cluster_tol = std::nullopt);

inline constexpr double kCollisionTol = 1e-10;
inline constexpr int kMaxCollisionRetries = 5;

// Independent oracle: diagonalize sum_j c_j T_j for a seeded random unit
// vector c and read joint values as Rayleigh quotients.
JointSpectrum random_combination_check(const CommutingFamily& family, std::uint64_t seed,
                                       std::optional<double> cluster_tol = std::nullopt);

// Joint spectrum of (A (x) I, I (x) B) from those of A and B.
JointSpectrum product_spectrum(const JointSpectrum& a, const JointSpectrum& b);

// S2: dense T_z; S2xS2: product of two S2 spectra.
JointSpectrum toric_joint_spectrum(const ToricModel& model);

// Jaynes-Cummings joint spectrum straight from the exact blocks; each block is
// a real symmetric tridiagonal eigenproblem. OpenMP over blocks, with a serial
// reference.
JointSpectrum jc_block_spectrum(std::span<const JCBlock> blocks, int n);
JointSpectrum jc_block_spectrum_serial(std::span<const JCBlock> blocks, int n);

}  // namespace jointspec
