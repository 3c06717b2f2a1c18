#include "jointspec/family.hpp"

#include <algorithm>
#include <sstream>

#include "jointspec/errors.hpp"

namespace jointspec {

CommutingFamily::CommutingFamily(std::vector<HermitianOperator> ops, double commute_tol,
                                 std::optional<ClassicalSystem> classical)
    : ops_(std::move(ops)), commute_tol_(commute_tol), classical_(std::move(classical)) {
    if (ops_.empty()) throw InvalidArgument("CommutingFamily needs at least one operator");
    if (!(commute_tol_ >= 0.0)) throw InvalidArgument("commute_tol must be >= 0");
    for (const auto& op : ops_) {
        if (op.dim() != ops_.front().dim())
            throw DimensionMismatch("CommutingFamily: operators of different dimension");
        if (op.param() != ops_.front().param())
            throw ParameterMismatch("CommutingFamily: operators with different hbar");
    }
    if (classical_ && classical_->dim != static_cast<int>(ops_.size()))
        throw DimensionMismatch("CommutingFamily: classical moment map has different length");
    const double worst = max_commutator();
    if (worst > commute_tol_) {
        std::ostringstream msg;
        msg << "CommutingFamily: commutator norm " << worst << " exceeds tolerance "
            << commute_tol_;
        throw NonCommuting(msg.str());
    }
}

double CommutingFamily::max_commutator() const {
    double worst = 0.0;
    for (std::size_t a = 0; a < ops_.size(); ++a)
        for (std::size_t b = a + 1; b < ops_.size(); ++b) {
            // Diagonal pairs commute exactly; skip the O(n^3) product.
            if (ops_[a].is_diagonal() && ops_[b].is_diagonal()) continue;
            worst = std::max(worst, commutator_norm(ops_[a], ops_[b]));
        }
    return worst;
}

}  // namespace jointspec
