#pragma once

// Exact scalar types shared by every module.

#include <gmpxx.h>

#include <string>

namespace sbcoinv {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// num / den in lowest terms; mpq_class(num, den) leaves the fraction as given.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

}  // namespace sbcoinv
