#pragma once

#include <gmpxx.h>

#include <string>

namespace lgint {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms; integers are printed without a denominator.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// (-1)^k as +1/-1.
constexpr int sign_power(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace lgint
