#include "qschur/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qschur {

Monomial::Monomial(Rat c, int ea_, int eq_) : coeff(std::move(c)), ea(ea_), eq(eq_) {
    if (coeff == 0)
        throw std::invalid_argument("Monomial: zero coefficient");
}

Monomial Monomial::operator*(const Monomial& o) const {
    return Monomial(coeff * o.coeff, ea + o.ea, eq + o.eq);
}

Monomial Monomial::inverse() const {
    return Monomial(1 / coeff, -ea, -eq);
}

Monomial Monomial::pow(int e) const {
    if (e == 0)
        return Monomial(1, 0, 0);
    Monomial base = e > 0 ? *this : inverse();
    int k = e > 0 ? e : -e;
    Monomial out = base;
    for (int i = 1; i < k; ++i)
        out = out * base;
    return out;
}

bool Monomial::operator<(const Monomial& o) const {
    if (ea != o.ea)
        return ea < o.ea;
    if (eq != o.eq)
        return eq < o.eq;
    return coeff < o.coeff;
}

std::string Monomial::str() const {
    return LaurentQA(*this).str();
}

LaurentQA::LaurentQA(long c) {
    if (c != 0)
        terms_[{0, 0}] = Rat(c);
}

LaurentQA::LaurentQA(const Rat& c) {
    if (c != 0)
        terms_[{0, 0}] = c;
}

LaurentQA::LaurentQA(const Monomial& m) {
    terms_[{m.ea, m.eq}] = m.coeff;
}

LaurentQA LaurentQA::term(const Rat& c, int ea, int eq) {
    LaurentQA out;
    if (c != 0)
        out.terms_[{ea, eq}] = c;
    return out;
}

LaurentQA LaurentQA::var_a(int e) { return term(1, e, 0); }
LaurentQA LaurentQA::var_q(int e) { return term(1, 0, e); }

bool LaurentQA::is_one() const {
    if (terms_.size() != 1)
        return false;
    const auto& [e, c] = *terms_.begin();
    return e == ExpPair{0, 0} && c == 1;
}

void LaurentQA::add_term(const ExpPair& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0)
            terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

LaurentQA& LaurentQA::operator+=(const LaurentQA& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentQA& LaurentQA::operator-=(const LaurentQA& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentQA LaurentQA::operator+(const LaurentQA& o) const {
    LaurentQA out = *this;
    out += o;
    return out;
}

LaurentQA LaurentQA::operator-(const LaurentQA& o) const {
    LaurentQA out = *this;
    out -= o;
    return out;
}

LaurentQA LaurentQA::operator-() const {
    LaurentQA out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

LaurentQA LaurentQA::operator*(const LaurentQA& o) const {
    LaurentQA out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term({e1.ea + e2.ea, e1.eq + e2.eq}, c1 * c2);
    return out;
}

LaurentQA& LaurentQA::operator*=(const LaurentQA& o) {
    *this = *this * o;
    return *this;
}

LaurentQA LaurentQA::times_monomial(const Monomial& m) const {
    LaurentQA out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(ExpPair{e.ea + m.ea, e.eq + m.eq}, c * m.coeff);
    return out;
}

Monomial LaurentQA::as_monomial() const {
    if (terms_.size() != 1)
        throw std::domain_error("LaurentQA::as_monomial: not a single term");
    const auto& [e, c] = *terms_.begin();
    return Monomial(c, e.ea, e.eq);
}

std::size_t LaurentQA::max_numerator_digits() const {
    std::size_t best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, rat_num_digits(c));
    return best;
}

std::string LaurentQA::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool havevar = e.ea != 0 || e.eq != 0;
        if (abs != 1 || !havevar) {
            os << abs.get_str();
            if (havevar)
                os << "*";
        }
        if (e.ea != 0) {
            os << "a";
            if (e.ea != 1)
                os << "^" << e.ea;
            if (e.eq != 0)
                os << "*";
        }
        if (e.eq != 0) {
            os << "q";
            if (e.eq != 1)
                os << "^" << e.eq;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentQA& x) {
    return os << x.str();
}

LaurentQA qint(int n) {
    if (n == 0)
        return {};
    if (n < 0)
        return -qint(-n);
    LaurentQA out;
    for (int e = -(n - 1); e <= n - 1; e += 2)
        out += LaurentQA::term(1, 0, e);
    return out;
}

LaurentQA qbinom(int n, int m) {
    if (n < 0 || m < 0 || m > n)
        throw std::domain_error("qbinom: requires 0 <= m <= n");
    // result after step k equals the Gaussian binomial [n-m+k over k],
    // so every division along the way is exact.
    LaurentQA result(1);
    for (int k = 1; k <= m; ++k) {
        auto quot = divide_exact(result * qint(n - m + k), qint(k));
        if (!quot)
            throw std::logic_error("qbinom: inexact division");
        result = *quot;
    }
    return result;
}

namespace {

struct ExpBox {
    int ea_lo, ea_hi, eq_lo, eq_hi;
};

ExpBox exponent_box(const LaurentQA& x) {
    ExpBox b{0, 0, 0, 0};
    bool first = true;
    for (const auto& [e, c] : x.terms()) {
        if (first) {
            b = {e.ea, e.ea, e.eq, e.eq};
            first = false;
        } else {
            b.ea_lo = std::min(b.ea_lo, e.ea);
            b.ea_hi = std::max(b.ea_hi, e.ea);
            b.eq_lo = std::min(b.eq_lo, e.eq);
            b.eq_hi = std::max(b.eq_hi, e.eq);
        }
    }
    return b;
}

} // namespace

std::optional<LaurentQA> divide_exact(const LaurentQA& x, const LaurentQA& y) {
    if (y.is_zero())
        throw std::domain_error("divide_exact: division by zero");
    if (x.is_zero())
        return LaurentQA{};
    // Newton-polytope bound: an exact quotient has its exponents inside the
    // per-variable window below, which also bounds the loop.
    ExpBox bx = exponent_box(x), by = exponent_box(y);
    const int ea_lo = bx.ea_lo - by.ea_hi, ea_hi = bx.ea_hi - by.ea_lo;
    const int eq_lo = bx.eq_lo - by.eq_hi, eq_hi = bx.eq_hi - by.eq_lo;

    const auto& ylead = *y.terms().rbegin();
    LaurentQA r = x, quot;
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        int tea = rlead.first.ea - ylead.first.ea;
        int teq = rlead.first.eq - ylead.first.eq;
        if (tea < ea_lo || tea > ea_hi || teq < eq_lo || teq > eq_hi)
            return std::nullopt;
        Monomial t(rlead.second / ylead.second, tea, teq);
        quot += LaurentQA(t);
        r -= y.times_monomial(t);
    }
    return quot;
}

} // namespace qschur
