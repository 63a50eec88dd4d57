#pragma once

#include <gmpxx.h>
#include <string>

namespace catlab {

// Exact arbitrary-precision scalars.  All library arithmetic is over the
// rationals; there is no floating-point polynomial or matrix type.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Canonical string form: "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_from_string(const std::string& s);

/// Falling factorial n(n-1)...(n-k+1).
inline Integer falling_factorial(long n, long k) {
    Integer r = 1;
    for (long t = 0; t < k; ++t) r *= (n - t);
    return r;
}

} // namespace catlab
