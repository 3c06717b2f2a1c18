#include <algorithm>
#include <string>

#include "jointspec/errors.hpp"
#include "jointspec/quantize.hpp"

namespace jointspec {

PolynomialSymbol PolynomialSymbol::constant(double c) { return monomial(0, 0, c); }

PolynomialSymbol PolynomialSymbol::monomial(int u_exp, int v_exp, double c) {
    if (u_exp < 0 || v_exp < 0) throw InvalidArgument("negative exponent in polynomial symbol");
    PolynomialSymbol p;
    p.terms[{u_exp, v_exp}] = c;
    return p;
}

int PolynomialSymbol::degree() const {
    int d = 0;
    for (const auto& [exps, c] : terms)
        if (c != 0.0) d = std::max(d, exps.first + exps.second);
    return d;
}

PolynomialSymbol PolynomialSymbol::operator+(const PolynomialSymbol& other) const {
    PolynomialSymbol out = *this;
    for (const auto& [exps, c] : other.terms) out.terms[exps] += c;
    return out;
}

HermitianOperator weyl_quantize(const PolynomialSymbol& symbol, const OscillatorAlgebra& osc) {
    const int deg = symbol.degree();
    if (deg > kWeylDegreeCap)
        throw DegreeCapExceeded("weyl_quantize: degree " + std::to_string(deg) + " exceeds cap " +
                                std::to_string(kWeylDegreeCap));
    if (osc.trunc <= deg)
        throw TruncationTooSmall("weyl_quantize: truncation " + std::to_string(osc.trunc) +
                                 " must exceed symbol degree " + std::to_string(deg));

    const Matrix u = osc.position().matrix();
    const Matrix v = osc.momentum().matrix();
    const Eigen::Index dim = osc.trunc;
    Matrix total = Matrix::Zero(dim, dim);

    for (const auto& [exps, coeff] : symbol.terms) {
        if (coeff == 0.0) continue;
        const auto [a, b] = exps;
        // Words over {0 = u, 1 = v}, enumerated in lexicographic order.
        std::vector<int> word(static_cast<std::size_t>(a), 0);
        word.insert(word.end(), static_cast<std::size_t>(b), 1);
        Matrix sum = Matrix::Zero(dim, dim);
        long count = 0;
        do {
            Matrix prod = Matrix::Identity(dim, dim);
            for (const int letter : word) prod = prod * (letter == 0 ? u : v);
            sum += prod;
            ++count;
        } while (std::next_permutation(word.begin(), word.end()));
        total += (coeff / static_cast<double>(count)) * sum;
    }
    return {total, osc.param};
}

}  // namespace jointspec
