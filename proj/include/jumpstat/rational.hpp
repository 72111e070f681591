#pragma once

#include <gmpxx.h>

#include <string>

namespace jumpstat {

// Exact rationals and big integers. GMP keeps mpq values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" rendering, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline std::string to_string(const Integer& z) {
    return z.get_str();
}

inline Rational parse_rational(const std::string& text) {
    Rational r(text, 10);
    r.canonicalize();
    return r;
}

/// base^exp for a nonnegative exponent.
inline Rational pow(const Rational& base, unsigned long exp) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return result;
}

inline Integer pow(const Integer& base, unsigned long exp) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

inline Integer factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

inline bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

}  // namespace jumpstat
