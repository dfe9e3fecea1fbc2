#pragma once

#include <gmpxx.h>

#include <string>

namespace nlmult {

using Integer = mpz_class;
using Rational = mpq_class;

// Invariant: reduced to lowest terms, denominator > 0 (mpq canonical form).
inline Rational frac(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Integer& z) { return sgn(z); }

// "num/den" with the denominator always spelled out: 0 -> "0/1", 1 -> "1/1".
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "a/b" or "a".
inline Rational rational_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

}  // namespace nlmult
