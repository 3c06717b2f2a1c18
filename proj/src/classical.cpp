#include "jointspec/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jointspec/errors.hpp"

namespace jointspec {
namespace {

std::size_t factor_width(Factor f) { return f == Factor::sphere ? 3 : 2; }

std::size_t factor_grid_size(Factor f, const GridResolution& g) {
    return f == Factor::sphere ? static_cast<std::size_t>(g.sphere) * g.sphere
                               : static_cast<std::size_t>(g.plane) * g.plane;
}

// Writes the coordinates of grid point `index` of one factor into `out`.
void factor_point(Factor f, const GridResolution& g, double plane_radius, std::size_t index,
                  double* out) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (f == Factor::sphere) {
        // Equal-area grid: z uniform (poles included), longitude uniform.
        const auto iz = static_cast<int>(index / g.sphere);
        const auto ip = static_cast<int>(index % g.sphere);
        const double z = -1.0 + 2.0 * iz / (g.sphere - 1);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = two_pi * ip / g.sphere;
        out[0] = rho * std::cos(phi);
        out[1] = rho * std::sin(phi);
        out[2] = z;
    } else {
        const auto ir = static_cast<int>(index / g.plane);
        const auto it = static_cast<int>(index % g.plane);
        const double r = plane_radius * ir / (g.plane - 1);
        const double theta = two_pi * it / g.plane;
        out[0] = r * std::cos(theta);
        out[1] = r * std::sin(theta);
    }
}

void grid_point(const ClassicalSystem& sys, const GridResolution& g, double plane_radius,
                std::size_t flat, std::vector<double>& point) {
    std::size_t offset = 0;
    for (const Factor f : sys.factors) {
        const std::size_t n = factor_grid_size(f, g);
        factor_point(f, g, plane_radius, flat % n, point.data() + offset);
        flat /= n;
        offset += factor_width(f);
    }
}

std::size_t grid_size(const ClassicalSystem& sys, const GridResolution& g) {
    std::size_t total = 1;
    for (const Factor f : sys.factors) total *= factor_grid_size(f, g);
    return total;
}

}  // namespace

std::size_t ClassicalSystem::phase_dim() const {
    std::size_t n = 0;
    for (const Factor f : factors) n += factor_width(f);
    return n;
}

bool ClassicalSystem::compact() const {
    return std::none_of(factors.begin(), factors.end(),
                        [](Factor f) { return f == Factor::plane; });
}

ClassicalSystem sphere_height() {
    ClassicalSystem sys;
    sys.name = "S2";
    sys.factors = {Factor::sphere};
    sys.dim = 1;
    sys.moment = [](std::span<const double> p) { return std::vector<double>{p[2]}; };
    sys.gradient = [](int, std::span<const double>) { return std::vector<double>{0.0, 0.0, 1.0}; };
    return sys;
}

ClassicalSystem sphere_pair() {
    ClassicalSystem sys;
    sys.name = "S2xS2";
    sys.factors = {Factor::sphere, Factor::sphere};
    sys.dim = 2;
    sys.moment = [](std::span<const double> p) { return std::vector<double>{p[2], p[5]}; };
    sys.gradient = [](int c, std::span<const double>) {
        std::vector<double> g(6, 0.0);
        g[c == 0 ? 2 : 5] = 1.0;
        return g;
    };
    return sys;
}

ClassicalSystem jaynes_cummings_classical() {
    ClassicalSystem sys;
    sys.name = "JC";
    sys.factors = {Factor::sphere, Factor::plane};
    sys.dim = 2;
    // p = (x, y, z, u, v)
    sys.moment = [](std::span<const double> p) {
        const double f1 = 0.5 * (p[3] * p[3] + p[4] * p[4]) + p[2];
        const double f2 = 0.5 * (p[3] * p[0] + p[4] * p[1]);
        return std::vector<double>{f1, f2};
    };
    sys.gradient = [](int c, std::span<const double> p) {
        if (c == 0) return std::vector<double>{0.0, 0.0, 1.0, p[3], p[4]};
        return std::vector<double>{0.5 * p[3], 0.5 * p[4], 0.0, 0.5 * p[0], 0.5 * p[1]};
    };
    // (u^2+v^2)/2 <= c - z <= c + 1
    sys.plane_radius_for_window = [](double c) {
        if (c < -1.0) throw EmptyWindow("JC window f1 <= c is empty for c < -1");
        return std::sqrt(2.0 * (c + 1.0));
    };
    return sys;
}

ClassicalSystem classical_system(const std::string& name) {
    if (name == "S2") return sphere_height();
    if (name == "S2xS2") return sphere_pair();
    if (name == "JC") return jaynes_cummings_classical();
    throw InvalidArgument("unknown classical system '" + name + "'");
}

ClassicalSystem shifted(const ClassicalSystem& sys, std::vector<double> offset) {
    if (static_cast<int>(offset.size()) != sys.dim)
        throw DimensionMismatch("shifted: offset length differs from moment dimension");
    ClassicalSystem out = sys;
    out.name = sys.name + "+shift";
    out.moment = [base = sys.moment, offset = std::move(offset)](std::span<const double> p) {
        auto v = base(p);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += offset[i];
        return v;
    };
    return out;
}

PointCloud sample_moment_image_serial(const ClassicalSystem& sys, GridResolution grid,
                                      double plane_radius) {
    const std::size_t n = grid_size(sys, grid);
    PointCloud out(static_cast<Eigen::Index>(n), sys.dim);
    std::vector<double> point(sys.phase_dim());
    for (std::size_t i = 0; i < n; ++i) {
        grid_point(sys, grid, plane_radius, i, point);
        const auto f = sys.moment(point);
        for (int c = 0; c < sys.dim; ++c) out(static_cast<Eigen::Index>(i), c) = f[c];
    }
    return out;
}

PointCloud sample_moment_image_parallel(const ClassicalSystem& sys, GridResolution grid,
                                        double plane_radius) {
    const auto n = static_cast<std::int64_t>(grid_size(sys, grid));
    PointCloud out(n, sys.dim);
#pragma omp parallel
    {
        std::vector<double> point(sys.phase_dim());
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            grid_point(sys, grid, plane_radius, static_cast<std::size_t>(i), point);
            const auto f = sys.moment(point);
            for (int c = 0; c < sys.dim; ++c) out(i, c) = f[c];
        }
    }
    return out;
}

ClassicalSpectrum classical_spectrum(const ClassicalSystem& sys, GridResolution grid,
                                     std::optional<double> window) {
    if (grid.sphere < 16 || grid.plane < 16)
        throw InvalidArgument("classical_spectrum: resolution must be >= 16 per factor dimension");
    double radius = 0.0;
    if (!sys.compact()) {
        if (!window) throw EmptyWindow(sys.name + " is noncompact: a window f1 <= c is required");
        radius = sys.plane_radius_for_window(*window);
    }

    PointCloud all = sample_moment_image_parallel(sys, grid, radius);
    if (window) {
        std::vector<Eigen::Index> keep;
        for (Eigen::Index i = 0; i < all.rows(); ++i)
            if (all(i, 0) <= *window) keep.push_back(i);
        if (keep.empty()) throw EmptyWindow("no classical sample satisfies f1 <= window");
        PointCloud kept(static_cast<Eigen::Index>(keep.size()), all.cols());
        for (std::size_t r = 0; r < keep.size(); ++r) kept.row(r) = all.row(keep[r]);
        all = std::move(kept);
    }
    Hull hull = hull_of(all);
    return {std::move(all), std::move(hull), window};
}

std::vector<double> hamiltonian_field(const ClassicalSystem& sys, int component,
                                      std::span<const double> p) {
    const auto grad = sys.gradient(component, p);
    std::vector<double> field(p.size(), 0.0);
    std::size_t o = 0;
    for (const Factor f : sys.factors) {
        if (f == Factor::sphere) {
            // dX/dt = X x grad H
            const double x = p[o], y = p[o + 1], z = p[o + 2];
            const double gx = grad[o], gy = grad[o + 1], gz = grad[o + 2];
            field[o] = y * gz - z * gy;
            field[o + 1] = z * gx - x * gz;
            field[o + 2] = x * gy - y * gx;
            o += 3;
        } else {
            field[o] = grad[o + 1];
            field[o + 1] = -grad[o];
            o += 2;
        }
    }
    return field;
}

double poisson_bracket(const ClassicalSystem& sys, int i, int j, std::span<const double> point) {
    const auto grad_i = sys.gradient(i, point);
    const auto field_j = hamiltonian_field(sys, j, point);
    double s = 0.0;
    for (std::size_t a = 0; a < grad_i.size(); ++a) s += grad_i[a] * field_j[a];
    return s;
}

double poisson_check(const ClassicalSystem& sys, std::span<const double> point, double t_end,
                     double dt, PoissonOptions options) {
    if (point.size() != sys.phase_dim())
        throw DimensionMismatch("poisson_check: point has wrong phase-space dimension");
    if (!(dt > 0.0) || dt > 1e-3) throw InvalidArgument("poisson_check: require 0 < dt <= 1e-3");
    const int observed = options.observed_component.value_or(sys.dim > 1 ? 1 : 0);

    std::vector<double> state(point.begin(), point.end());
    const double f0 = sys.moment(state)[observed];
    const std::size_t n = state.size();

    auto check_window = [&](const std::vector<double>& s) {
        std::size_t o = 0;
        for (const Factor f : sys.factors) {
            if (f == Factor::plane && std::hypot(s[o], s[o + 1]) > options.plane_window)
                throw WindowExceeded("trajectory left the plane window");
            o += factor_width(f);
        }
    };
    check_window(state);

    auto field = [&](const std::vector<double>& s) {
        return hamiltonian_field(sys, options.flow_component, s);
    };

    double drift = 0.0;
    const auto steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
    std::vector<double> tmp(n);
    for (long step = 0; step < steps; ++step) {
        const double h = std::min(dt, t_end - step * dt);
        const auto k1 = field(state);
        for (std::size_t a = 0; a < n; ++a) tmp[a] = state[a] + 0.5 * h * k1[a];
        const auto k2 = field(tmp);
        for (std::size_t a = 0; a < n; ++a) tmp[a] = state[a] + 0.5 * h * k2[a];
        const auto k3 = field(tmp);
        for (std::size_t a = 0; a < n; ++a) tmp[a] = state[a] + h * k3[a];
        const auto k4 = field(tmp);
        for (std::size_t a = 0; a < n; ++a)
            state[a] += h / 6.0 * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
        check_window(state);
        drift = std::max(drift, std::abs(sys.moment(state)[observed] - f0));
    }
    return drift;
}

}  // namespace jointspec
