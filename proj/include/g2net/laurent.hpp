#pragma once

#include <map>
#include <string>
#include <utility>

#include "g2net/rational.hpp"

namespace g2net {

/// Exponent pair of one monomial q^q * r^r. Ordered lexicographically by
/// (r, q); the largest key under this order is the leading term used for
/// sign normalisation.
struct Exponents {
  int rExp = 0;
  int qExp = 0;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Element of Z[q^{+-1}, r^{+-1}] with arbitrary-precision rational
/// coefficients. Terms with coefficient zero are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) { addTerm(c, 0, 0); }
  explicit LaurentPoly(long c) { addTerm(Rational(c), 0, 0); }

  static LaurentPoly monomial(const Rational& c, int qExp, int rExp = 0) {
    LaurentPoly p;
    p.addTerm(c, qExp, rExp);
    return p;
  }
  static LaurentPoly variableQ() { return monomial(Rational(1), 1, 0); }
  static LaurentPoly variableR() { return monomial(Rational(1), 0, 1); }
  static LaurentPoly one() { return LaurentPoly(1); }

  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  bool isConstant() const;

  /// Adds c * q^qExp * r^rExp, erasing the term if the sum cancels.
  void addTerm(const Rational& c, int qExp, int rExp);

  const TermMap& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }

  int minQExp() const;
  int maxQExp() const;
  int minRExp() const;
  int maxRExp() const;
  bool dependsOnQ() const;
  bool dependsOnR() const;

  /// Leading coefficient under the lex (r, q) order. Zero poly -> 0.
  Rational leadingCoeff() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly scaled(const Rational& c) const;
  /// Multiplies every term by q^dq * r^dr.
  LaurentPoly shifted(int dq, int dr) const;
  LaurentPoly pow(unsigned e) const;

  /// q -> q^{-1}: negates every q exponent.
  LaurentPoly substituteQInverse() const;

  /// Exact value at q = qVal, r = rVal. Negative exponents require the
  /// corresponding value to be nonzero.
  Rational evalAt(const Rational& qVal, const Rational& rVal) const;

  /// Terms sorted by descending (r-exponent, q-exponent), e.g.
  /// "q^5+q^4+q+1+q^-1+q^-4+q^-5". Zero renders as "0".
  std::string toString() const;

 private:
  TermMap terms_;
};

/// Splits p as factor * primitive where factor = c * q^a * r^b (c rational)
/// and primitive has integer coprime coefficients, lowest q- and r-exponents
/// zero, and positive leading coefficient. Zero splits as (0, 0).
struct UnitContentSplit {
  Rational coeff;
  int qShift = 0;
  int rShift = 0;
  LaurentPoly primitive;
};
UnitContentSplit extractUnitContent(const LaurentPoly& p);

/// Gcd of two integer-coefficient polynomials in Z[q, r] (no negative
/// exponents), returned primitive with positive leading coefficient.
/// Uses primitive pseudo-remainder sequences with r as the outer variable.
LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division in Q[q, r]; throws InternalError if not divisible.
LaurentPoly exactDivide(const LaurentPoly& num, const LaurentPoly& div);

}  // namespace g2net
