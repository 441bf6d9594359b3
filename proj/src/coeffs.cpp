#include "g2net/coeffs.hpp"

namespace g2net {

namespace {

LaurentPoly qPowSum(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (const auto& [coeff, exp] : terms) p.addTerm(Rational(coeff), exp, 0);
  return p;
}

CoefficientTable build() {
  CoefficientTable tab;
  const FieldValue q = FieldValue::q();
  const FieldValue r = FieldValue::r();
  const FieldValue one(1);

  // 7c = q^5+q^4+q+1+q^-1+q^-4+q^-5
  tab.sevenC = FieldValue(
      qPowSum({{1, 5}, {1, 4}, {1, 1}, {1, 0}, {1, -1}, {1, -4}, {1, -5}}));

  tab.alpha = q;
  tab.beta = q - one;
  // gamma = (-q^7+q^-6-q+1)/7c
  tab.gamma =
      FieldValue(qPowSum({{-1, 7}, {1, -6}, {-1, 1}, {1, 0}})) / tab.sevenC;
  // delta = (q^4-q^-3-q+1)/r
  tab.delta =
      FieldValue(qPowSum({{1, 4}, {-1, -3}, {-1, 1}, {1, 0}})) / r;

  const FieldValue oneMinusAlphaSq = one - tab.alpha * tab.alpha;
  tab.lambda = (tab.alpha * tab.gamma + tab.beta) / oneMinusAlphaSq;
  tab.mu = (tab.alpha * tab.beta + tab.gamma) / oneMinusAlphaSq;
  tab.rho = tab.delta / oneMinusAlphaSq;
  tab.sigma = tab.alpha * tab.delta / oneMinusAlphaSq;

  // t = (1/delta)(-q^3 + alpha q^-3 - gamma)
  tab.t = (-q.pow(3) + tab.alpha * q.pow(-3) - tab.gamma) / tab.delta;
  // g = q^6+q^5+q^4+q^2+q+1
  tab.g = FieldValue(qPowSum({{1, 6}, {1, 5}, {1, 4}, {1, 2}, {1, 1}, {1, 0}}));
  tab.d = r * q.pow(3) / tab.g;
  return tab;
}

}  // namespace

const CoefficientTable& coefficientTable() {
  static const CoefficientTable tab = build();
  return tab;
}

const EigenvalueTable& eigenvalueTable() {
  static const EigenvalueTable table = [] {
    const FieldValue q = FieldValue::q();
    const FieldValue r = FieldValue::r();
    const FieldValue zero, one(1);
    const FieldValue sevenC = coefficientTable().sevenC;
    EigenvalueTable t;
    //            pos cross     neg cross    identity  cup-cap  H
    t[0] = {q.pow(-6),   q.pow(6),    one, sevenC, zero};  // C
    t[1] = {-q.pow(-3),  -q.pow(3),   one, zero,   r};     // V
    t[2] = {-one,        -one,        one, zero,   zero};  // L
    t[3] = {q,           q.pow(-1),   one, zero,   zero};  // W
    return t;
  }();
  return table;
}

FieldValue kuperbergR() {
  LaurentPoly p;
  for (int e : {2, 1, 0, -2, -3, -4}) p.addTerm(Rational(-1), e, 0);
  return FieldValue(p);
}

}  // namespace g2net
