#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "jointspec/errors.hpp"
#include "jointspec/inverse.hpp"

namespace jointspec {
namespace {

std::string describe(const JointPoint& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? ", " : "") << p.coords[i];
    os << ")";
    return os.str();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

LatticeFit fit_lattice(const JointSpectrum& js) {
    for (const auto& p : js.points)
        if (p.multiplicity != 1)
            throw SimplicityViolation("joint eigenvalue " + describe(p) + " has multiplicity " +
                                      std::to_string(p.multiplicity));

    LatticeFit fit;
    fit.k = js.param.k.value_or(0);
    for (int axis = 0; axis < js.dim; ++axis) {
        std::vector<double> values;
        for (const auto& p : js.points) values.push_back(p.coords[axis]);
        std::sort(values.begin(), values.end());
        if (values.empty()) throw InsufficientPoints("fit_lattice: empty spectrum");
        const double tol = 1e-9 * (values.back() - values.front());
        std::vector<double> distinct{values.front()};
        for (const double v : values)
            if (v - distinct.back() > tol) distinct.push_back(v);
        if (distinct.size() < 2)
            throw InsufficientPoints("fit_lattice: axis " + std::to_string(axis) +
                                     " has fewer than 2 distinct values");
        std::vector<double> gaps;
        for (std::size_t i = 1; i < distinct.size(); ++i) gaps.push_back(distinct[i] - distinct[i - 1]);
        fit.origin.push_back(distinct.front());
        fit.spacing.push_back(median(std::move(gaps)));
    }

    for (const auto& p : js.points) {
        double d2 = 0.0;
        for (int axis = 0; axis < js.dim; ++axis) {
            const double rel = (p.coords[axis] - fit.origin[axis]) / fit.spacing[axis];
            const double node = fit.origin[axis] + std::round(rel) * fit.spacing[axis];
            d2 += (p.coords[axis] - node) * (p.coords[axis] - node);
        }
        fit.residual = std::max(fit.residual, std::sqrt(d2));
    }
    const double min_spacing = *std::min_element(fit.spacing.begin(), fit.spacing.end());
    if (fit.residual > 0.1 * min_spacing) {
        std::ostringstream msg;
        msg << "fit_lattice: residual " << fit.residual << " exceeds 0.1 x spacing " << min_spacing;
        throw NotALattice(msg.str());
    }
    return fit;
}

long isolation_violations(const JointSpectrum& js, double radius) {
    if (!(radius > 0.0)) throw InvalidArgument("isolation_violations: radius must be positive");
    // Bucket points on a grid of cell size `radius`; neighbours lie in adjacent cells.
    using Cell = std::vector<long long>;
    std::map<Cell, std::vector<std::size_t>> buckets;
    auto cell_of = [&](const JointPoint& p) {
        Cell c(p.coords.size());
        for (std::size_t a = 0; a < p.coords.size(); ++a)
            c[a] = static_cast<long long>(std::floor(p.coords[a] / radius));
        return c;
    };
    for (std::size_t i = 0; i < js.points.size(); ++i) buckets[cell_of(js.points[i])].push_back(i);

    long violations = 0;
    const std::size_t d = static_cast<std::size_t>(js.dim);
    std::size_t neighbours = 1;
    for (std::size_t a = 0; a < d; ++a) neighbours *= 3;
    for (std::size_t i = 0; i < js.points.size(); ++i) {
        const auto& p = js.points[i];
        violations += p.multiplicity - 1;
        const Cell base = cell_of(p);
        for (std::size_t code = 0; code < neighbours; ++code) {
            Cell c = base;
            std::size_t rest = code;
            for (std::size_t a = 0; a < d; ++a) {
                c[a] += static_cast<long long>(rest % 3) - 1;
                rest /= 3;
            }
            const auto it = buckets.find(c);
            if (it == buckets.end()) continue;
            for (const std::size_t j : it->second) {
                if (j == i) continue;
                double d2 = 0.0;
                for (std::size_t a = 0; a < d; ++a) {
                    const double diff = p.coords[a] - js.points[j].coords[a];
                    d2 += diff * diff;
                }
                if (d2 <= radius * radius) violations += js.points[j].multiplicity;
            }
        }
    }
    return violations;
}

}  // namespace jointspec
