#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "qschur/rational.hpp"

namespace qschur {

/// Exponent pair of a term c * a^ea * q^eq. Ordered lexicographically by
/// (ea, eq); that order fixes serialization and pivoting everywhere.
struct ExpPair {
    int ea = 0;
    int eq = 0;
    friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

/// A single nonzero term c * a^ea * q^eq. Monomials are the scalars the
/// segment combinatorics produces; they embed into LaurentQA as one term.
struct Monomial {
    Rat coeff = 1;
    int ea = 0;
    int eq = 0;

    Monomial() = default;
    Monomial(Rat c, int ea_, int eq_);

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int e) const; // negative exponents allowed

    bool operator==(const Monomial& o) const = default;
    /// (ea, eq, coeff) lexicographic; used for canonical multiset orders.
    bool operator<(const Monomial& o) const;

    std::string str() const;
};

/// Sparse Laurent polynomial in the two formal variables a and q over Rat.
/// Invariant: no stored coefficient is zero; equality is term-map equality.
class LaurentQA {
public:
    LaurentQA() = default; // zero
    LaurentQA(long c);
    LaurentQA(const Rat& c);
    explicit LaurentQA(const Monomial& m);

    static LaurentQA term(const Rat& c, int ea, int eq);
    static LaurentQA var_a(int e = 1);
    static LaurentQA var_q(int e = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<ExpPair, Rat>& terms() const { return terms_; }

    LaurentQA& operator+=(const LaurentQA& o);
    LaurentQA& operator-=(const LaurentQA& o);
    LaurentQA operator+(const LaurentQA& o) const;
    LaurentQA operator-(const LaurentQA& o) const;
    LaurentQA operator-() const;
    LaurentQA operator*(const LaurentQA& o) const;
    LaurentQA& operator*=(const LaurentQA& o);
    bool operator==(const LaurentQA& o) const = default;

    LaurentQA times_monomial(const Monomial& m) const;

    bool is_monomial() const { return terms_.size() == 1; }
    Monomial as_monomial() const; // throws unless exactly one term

    /// Largest decimal numerator among the coefficients (0 for zero).
    std::size_t max_numerator_digits() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentQA& x);

private:
    void add_term(const ExpPair& e, const Rat& c);
    std::map<ExpPair, Rat> terms_;
};

/// Balanced q-integer [n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n], [0] = 0.
LaurentQA qint(int n);

/// Gaussian binomial [n over m]; exact division of q-integer products.
/// Requires 0 <= m <= n.
LaurentQA qbinom(int n, int m);

/// Exact quotient x / y in the Laurent ring, or nullopt when y does not
/// divide x. Throws on y = 0.
std::optional<LaurentQA> divide_exact(const LaurentQA& x, const LaurentQA& y);

} // namespace qschur
