#include "qschur/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qschur {

UPoly UPoly::one() { return constant(LaurentQA(1)); }

UPoly UPoly::constant(const LaurentQA& c) {
    UPoly p;
    if (!c.is_zero())
        p.coeffs_.push_back(c);
    return p;
}

UPoly UPoly::from_coeffs(std::vector<LaurentQA> coeffs) {
    UPoly p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

UPoly UPoly::from_inverse_roots(const std::vector<Monomial>& roots) {
    UPoly p = one();
    for (const auto& rho : roots) {
        UPoly factor = from_coeffs({LaurentQA(1), -LaurentQA(rho)});
        p = p * factor;
    }
    return p;
}

bool UPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0].is_one();
}

LaurentQA UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return {};
    return coeffs_[k];
}

void UPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<LaurentQA> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < coeffs_.size())
            out[k] += coeffs_[k];
        if (k < o.coeffs_.size())
            out[k] += o.coeffs_[k];
    }
    return from_coeffs(std::move(out));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::vector<LaurentQA> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(out));
}

UPoly UPoly::substitute_scale(const Monomial& m) const {
    std::vector<LaurentQA> out;
    out.reserve(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out.push_back(coeffs_[k].times_monomial(m.pow(static_cast<int>(k))));
    return from_coeffs(std::move(out));
}

std::string UPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        if (os.tellp() > 0)
            os << " + ";
        os << "(" << coeffs_[k].str() << ")";
        if (k == 1)
            os << "*u";
        else if (k > 1)
            os << "*u^" << k;
    }
    return os.str();
}

std::optional<UPoly> exact_divide(const UPoly& f, const UPoly& g) {
    if (g.is_zero())
        throw std::domain_error("exact_divide: division by zero polynomial");
    if (f.is_zero())
        return UPoly{};
    if (f.degree() < g.degree())
        return std::nullopt;

    const LaurentQA& glead = g.coeffs().back();
    std::vector<LaurentQA> rem = f.coeffs();
    std::vector<LaurentQA> quot(f.degree() - g.degree() + 1);

    for (int d = f.degree(); d >= g.degree(); --d) {
        if (rem[d].is_zero())
            continue;
        // quotient coefficients are forced from the top down, so any inexact
        // coefficient division certifies that g does not divide f
        auto c = divide_exact(rem[d], glead);
        if (!c)
            return std::nullopt;
        int shift = d - g.degree();
        quot[shift] = *c;
        for (int k = 0; k <= g.degree(); ++k)
            rem[shift + k] -= *c * g.coeff(k);
    }
    for (int k = 0; k < g.degree(); ++k)
        if (!rem[k].is_zero())
            return std::nullopt;
    return UPoly::from_coeffs(std::move(quot));
}

} // namespace qschur
