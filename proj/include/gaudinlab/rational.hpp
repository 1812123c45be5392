#ifndef GAUDINLAB_RATIONAL_HPP
#define GAUDINLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "gaudinlab/errors.hpp"

namespace gaudinlab {

// Exact rational scalar. GMP keeps values canonical (gcd-reduced,
// denominator >= 1, zero as 0/1) provided construction goes through
// make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// r^e for integer e, e < 0 inverts (r must be nonzero then).
inline Rational pow_rational(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (is_zero(r)) {
    if (e < 0) throw DivisionByZero("inverting zero scalar");
    return Rational(0);
  }
  Rational base = e > 0 ? r : Rational(1) / r;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace gaudinlab

#endif
