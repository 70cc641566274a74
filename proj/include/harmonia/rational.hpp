#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace harmonia {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace harmonia
