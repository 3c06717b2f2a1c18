#pragma once

#include <optional>
#include <vector>

#include "jointspec/classical.hpp"
#include "jointspec/operators.hpp"

namespace jointspec {

// d pairwise-commuting Hermitian operators of equal dimension and hbar,
// optionally linked to the classical system of their principal symbols.
class CommutingFamily {
public:
    // Throws NonCommuting if some pairwise commutator norm exceeds commute_tol.
    CommutingFamily(std::vector<HermitianOperator> ops, double commute_tol,
                    std::optional<ClassicalSystem> classical = std::nullopt);

    const std::vector<HermitianOperator>& ops() const { return ops_; }
    const HermitianOperator& op(std::size_t j) const { return ops_.at(j); }
    std::size_t size() const { return ops_.size(); }
    Eigen::Index dim() const { return ops_.front().dim(); }
    const SemiclassicalParam& param() const { return ops_.front().param(); }
    double commute_tol() const { return commute_tol_; }
    const std::optional<ClassicalSystem>& classical() const { return classical_; }

    // Largest pairwise commutator norm.
    double max_commutator() const;

private:
    std::vector<HermitianOperator> ops_;
    double commute_tol_;
    std::optional<ClassicalSystem> classical_;
};

}  // namespace jointspec
