#pragma once

#include <string>

#include "g2net/laurent.hpp"

namespace g2net {

/// Element of the fraction field Frac(Z[q^{+-1}, r^{+-1}]), kept in a unique
/// canonical form:
///   - gcd(num, den) is a unit,
///   - den is an integer polynomial with coprime coefficients, lowest q- and
///     r-exponents zero and positive leading coefficient under lex (r, q),
///   - num absorbs all unit monomial factors and the rational scale.
/// Equality is therefore structural equality of the two term maps.
class FieldValue {
 public:
  FieldValue() : den_(LaurentPoly::one()) {}
  explicit FieldValue(long v) : num_(LaurentPoly(v)), den_(LaurentPoly::one()) {}
  explicit FieldValue(const Rational& v)
      : num_(LaurentPoly(v)), den_(LaurentPoly::one()) {}
  explicit FieldValue(const LaurentPoly& num)
      : num_(num), den_(LaurentPoly::one()) {}
  FieldValue(const LaurentPoly& num, const LaurentPoly& den);

  static FieldValue q() { return FieldValue(LaurentPoly::variableQ()); }
  static FieldValue r() { return FieldValue(LaurentPoly::variableR()); }
  static FieldValue qPow(int e) {
    return FieldValue(LaurentPoly::monomial(Rational(1), e, 0));
  }
  static FieldValue rPow(int e) {
    return FieldValue(LaurentPoly::monomial(Rational(1), 0, e));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  /// True when the canonical form is a Laurent polynomial (denominator 1).
  bool isPolynomial() const { return den_.isOne(); }

  FieldValue operator-() const;
  FieldValue operator+(const FieldValue& o) const;
  FieldValue operator-(const FieldValue& o) const;
  FieldValue operator*(const FieldValue& o) const;
  FieldValue operator/(const FieldValue& o) const;  // throws EvalError on 0
  FieldValue& operator+=(const FieldValue& o) { return *this = *this + o; }
  FieldValue& operator-=(const FieldValue& o) { return *this = *this - o; }
  FieldValue& operator*=(const FieldValue& o) { return *this = *this * o; }
  FieldValue& operator/=(const FieldValue& o) { return *this = *this / o; }
  bool operator==(const FieldValue& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  FieldValue inverse() const;
  FieldValue pow(int e) const;

  /// q -> q^{-1}; a field automorphism.
  FieldValue substituteQInverse() const;
  /// r -> e where e must be free of r; q -> e analogously.
  FieldValue substituteR(const FieldValue& e) const;
  FieldValue substituteQ(const FieldValue& e) const;

  /// Exact rational value at q = qVal, r = rVal (both nonzero).
  /// Throws EvalError at poles.
  Rational evalNumeric(const Rational& qVal, const Rational& rVal) const;

  std::string toString() const;
  /// {"num": [[qExp, rExp, "coeff"], ...], "den": [...]}
  std::string toJson() const;
  static FieldValue fromJson(const std::string& text);

 private:
  LaurentPoly num_;  // rational coefficients, may have negative exponents
  LaurentPoly den_;  // primitive integer polynomial, lowest exponents zero
};

}  // namespace g2net
