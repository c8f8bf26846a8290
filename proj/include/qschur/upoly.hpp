#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qschur/laurent.hpp"

namespace qschur {

/// Polynomial in u with LaurentQA coefficients, stored by ascending power.
/// Invariant: the highest stored coefficient is nonzero (zero poly is empty).
class UPoly {
public:
    UPoly() = default; // zero
    static UPoly one();
    static UPoly constant(const LaurentQA& c);
    static UPoly from_coeffs(std::vector<LaurentQA> coeffs);

    /// prod_i (1 - rho_i * u); empty list gives 1.
    static UPoly from_inverse_roots(const std::vector<Monomial>& roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const std::vector<LaurentQA>& coeffs() const { return coeffs_; }
    LaurentQA coeff(int k) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const = default;

    /// f(m*u): the u^k coefficient is multiplied by m^k.
    UPoly substitute_scale(const Monomial& m) const;

    std::string str() const;

private:
    void normalize();
    std::vector<LaurentQA> coeffs_;
};

/// Exact quotient f / g over the coefficient ring's fraction field, or
/// nullopt if the remainder is nonzero. Throws on g = 0.
std::optional<UPoly> exact_divide(const UPoly& f, const UPoly& g);

} // namespace qschur
