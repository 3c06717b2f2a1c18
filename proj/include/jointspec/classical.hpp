#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jointspec/geometry.hpp"

namespace jointspec {

// Phase-space factors. A point is the concatenation of factor coordinates:
// (x, y, z) on the unit sphere, (u, v) on the plane.
enum class Factor { sphere, plane };

// Sphere factors carry the bracket {x, y} = -z (and cyclic), planes carry
// {u, v} = 1. In this orientation the Jaynes-Cummings pair Poisson-commutes.
struct ClassicalSystem {
    std::string name;
    std::vector<Factor> factors;
    int dim = 1;  // number of moment-map components
    std::function<std::vector<double>(std::span<const double>)> moment;
    // Gradient of one component with respect to the concatenated coordinates.
    std::function<std::vector<double>(int, std::span<const double>)> gradient;
    // Largest plane radius compatible with the window f1 <= c; absent for compact systems.
    std::function<double(double)> plane_radius_for_window;

    std::size_t phase_dim() const;
    bool compact() const;
};

ClassicalSystem sphere_height();     // S2, F = z
ClassicalSystem sphere_pair();       // S2 x S2, F = (z1, z2)
ClassicalSystem jaynes_cummings_classical();  // S2 x R2, f1 = (u^2+v^2)/2 + z, f2 = (ux+vy)/2

// Catalog lookup by name: "S2", "S2xS2", "JC".
ClassicalSystem classical_system(const std::string& name);

// Same system with F replaced by F + offset.
ClassicalSystem shifted(const ClassicalSystem& sys, std::vector<double> offset);

struct GridResolution {
    int sphere = 32;  // latitude and longitude counts per sphere factor
    int plane = 32;   // radial and angular counts per plane factor
};

struct ClassicalSpectrum {
    PointCloud samples;
    Hull hull;
    std::optional<double> window;
};

ClassicalSpectrum classical_spectrum(const ClassicalSystem& sys, GridResolution grid = {},
                                     std::optional<double> window = std::nullopt);

// Moment-map images of every grid point (rows), before windowing. OpenMP
// kernel with a serial reference.
PointCloud sample_moment_image_serial(const ClassicalSystem& sys, GridResolution grid,
                                      double plane_radius);
PointCloud sample_moment_image_parallel(const ClassicalSystem& sys, GridResolution grid,
                                        double plane_radius);

// Hamiltonian vector field of component `component` at `point`.
std::vector<double> hamiltonian_field(const ClassicalSystem& sys, int component,
                                      std::span<const double> point);

struct PoissonOptions {
    int flow_component = 0;
    // Component whose drift is measured; defaults to the second one when d > 1.
    std::optional<int> observed_component;
    double plane_window = 50.0;
};

// RK4 integration of the flow of f_{flow}; returns max |f_obs(t) - f_obs(0)|.
double poisson_check(const ClassicalSystem& sys, std::span<const double> point, double t_end,
                     double dt, PoissonOptions options = {});

// Numerical Poisson bracket {f_i, f_j} at a point, from the closed-form gradients.
double poisson_bracket(const ClassicalSystem& sys, int i, int j, std::span<const double> point);

}  // namespace jointspec
