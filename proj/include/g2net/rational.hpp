#pragma once

#include <gmpxx.h>

#include <string>

#include "g2net/errors.hpp"

namespace g2net {

/// Arbitrary-precision rational; always kept in lowest terms by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// base^e for integer e of either sign. base == 0 with e < 0 throws.
inline Rational ratPow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw EvalError("0 raised to a negative power");
    return Rational(0);
  }
  Rational b = base;
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (invert) acc = 1 / acc;
  return acc;
}

/// "5", "-3", or "p/q" in lowest terms.
inline std::string ratToString(const Rational& x) {
  return x.get_str();
}

inline Rational ratFromString(const std::string& s) {
  Rational x;
  if (x.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  x.canonicalize();
  return x;
}

}  // namespace g2net
