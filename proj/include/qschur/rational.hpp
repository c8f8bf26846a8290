#pragma once

#include <gmpxx.h>
#include <string>

namespace qschur {

/// Exact rational scalar. Backed by GMP; always stored reduced with a
/// positive denominator, canonical zero is 0/1.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_string(const Rat& r) { return r.get_str(); }

inline std::string rat_num_string(const Rat& r) { return r.get_num().get_str(); }
inline std::string rat_den_string(const Rat& r) { return r.get_den().get_str(); }

/// Decimal digit count of the numerator (sign ignored).
inline std::size_t rat_num_digits(const Rat& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 10);
}

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }

} // namespace qschur
