#include "g2net/liealg.hpp"

#include "g2net/errors.hpp"

namespace g2net {

long weylDimension(Weight lambda) {
  if (lambda.m1 < 0 || lambda.m2 < 0)
    throw EvalError("weylDimension: weight is not dominant");
  RootDataG2::RootVec lam = RootDataG2::toRootBasis(lambda);
  RootDataG2::RootVec delta = RootDataG2::deltaVec();
  RootDataG2::RootVec lamDelta{lam.a1 + delta.a1, lam.a2 + delta.a2};
  long num = 1, den = 1;
  for (const auto& alpha : RootDataG2::positiveRoots()) {
    num *= RootDataG2::inner(lamDelta, alpha);
    den *= RootDataG2::inner(delta, alpha);
  }
  if (num % den != 0) throw InternalError("weylDimension: non-integer result");
  return num / den;
}

Rational casimirEigenvalue(Weight lambda) {
  if (lambda.m1 < 0 || lambda.m2 < 0)
    throw EvalError("casimirEigenvalue: weight is not dominant");
  RootDataG2::RootVec lam = RootDataG2::toRootBasis(lambda);
  RootDataG2::RootVec delta = RootDataG2::deltaVec();
  RootDataG2::RootVec shifted{lam.a1 + 2 * delta.a1, lam.a2 + 2 * delta.a2};
  long raw = RootDataG2::inner(lam, shifted);
  // Adjoint value (omega2, omega2 + 2 delta) = 24 anchors the normalisation.
  RootDataG2::RootVec adj = RootDataG2::toRootBasis(Weight{0, 1});
  RootDataG2::RootVec adjShifted{adj.a1 + 2 * delta.a1, adj.a2 + 2 * delta.a2};
  long adjRaw = RootDataG2::inner(adj, adjShifted);
  Rational out(raw, adjRaw);
  out.canonicalize();
  return out;
}

std::array<Rational, 4> chordEigenvalues() {
  // Chord between two V strands acts on the summand U by c_V - c_U / 2
  // (in units hhat^2/h, with Casimir values in the Killing normalisation).
  std::array<Rational, 4> out;
  Rational cV = casimirEigenvalue(Weight{1, 0});
  const auto& weights = RootDataG2::summandHighestWeights();
  for (int i = 0; i < 4; ++i)
    out[i] = cV - casimirEigenvalue(weights[i]) / 2;
  return out;
}

std::vector<long> rossoJonesNumeratorExponents() {
  RootDataG2::RootVec lam = RootDataG2::toRootBasis(Weight{1, 0});
  RootDataG2::RootVec delta = RootDataG2::deltaVec();
  RootDataG2::RootVec lamDelta{lam.a1 + delta.a1, lam.a2 + delta.a2};
  std::vector<long> out;
  for (const auto& alpha : RootDataG2::positiveRoots())
    out.push_back(RootDataG2::inner(lamDelta, alpha));
  return out;
}

std::vector<long> rossoJonesDenominatorExponents() {
  RootDataG2::RootVec delta = RootDataG2::deltaVec();
  std::vector<long> out;
  for (const auto& alpha : RootDataG2::positiveRoots())
    out.push_back(RootDataG2::inner(delta, alpha));
  return out;
}

LaurentPoly rossoJonesUnknot() {
  auto balanced = [](long e) {
    LaurentPoly p;
    p.addTerm(Rational(1), static_cast<int>(e), 0);
    p.addTerm(Rational(-1), static_cast<int>(-e), 0);
    return p;
  };
  LaurentPoly num = LaurentPoly::one(), den = LaurentPoly::one();
  for (long m : rossoJonesNumeratorExponents()) num *= balanced(m);
  for (long n : rossoJonesDenominatorExponents()) den *= balanced(n);
  FieldValue quotient = FieldValue(num) / FieldValue(den);
  if (!quotient.isPolynomial())
    throw InternalError("rossoJonesUnknot: quotient is not a Laurent polynomial");
  return quotient.num();
}

namespace {

// Solves the n x n system M x = rhs over the field by Gaussian elimination
// with exact arithmetic.
std::vector<FieldValue> solveLinear(std::vector<std::vector<FieldValue>> m,
                                    std::vector<FieldValue> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].isZero()) ++pivot;
    if (pivot == n) throw InternalError("solveLinear: singular system");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    FieldValue inv = m[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].isZero()) continue;
      FieldValue f = m[row][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

std::array<FieldValue, 4> deriveSkeinCoefficients() {
  std::array<Rational, 4> chord = chordEigenvalues();
  // Flip eigenvalues: +1 on the symmetric summands C and W, -1 on V and L.
  const std::array<int, 4> flip{1, -1, -1, 1};
  // q = exp(hhat^2 / 24h), so exp(x hhat^2/h) = q^{24x}; the crossing is
  // flip * exp(-(1/2) chord) and its inverse flip * exp(+(1/2) chord).
  std::array<FieldValue, 4> pos, neg;
  for (int i = 0; i < 4; ++i) {
    Rational e = chord[i] * (-12);
    if (e.get_den() != 1)
      throw InternalError("deriveSkeinCoefficients: non-integer q-exponent");
    int exp = static_cast<int>(e.get_num().get_si());
    pos[i] = FieldValue(flip[i]) * FieldValue::qPow(exp);
    neg[i] = FieldValue(flip[i]) * FieldValue::qPow(-exp);
  }
  // Quantum dimension from the Weyl character, re-expressed in q = u^2.
  LaurentPoly rj = rossoJonesUnknot();
  LaurentPoly quantumDim;
  for (const auto& [exps, c] : rj.terms()) {
    if (exps.qExp % 2 != 0)
      throw InternalError("deriveSkeinCoefficients: odd exponent in u");
    quantumDim.addTerm(c, exps.qExp / 2, 0);
  }
  const FieldValue zero, one(1);
  std::array<FieldValue, 4> id{one, one, one, one};
  std::array<FieldValue, 4> cup{FieldValue(quantumDim), zero, zero, zero};
  std::array<FieldValue, 4> h{zero, FieldValue::r(), zero, zero};

  std::vector<std::vector<FieldValue>> m(4, std::vector<FieldValue>(4));
  std::vector<FieldValue> rhs(4);
  for (int row = 0; row < 4; ++row) {
    m[row][0] = neg[row];
    m[row][1] = id[row];
    m[row][2] = cup[row];
    m[row][3] = h[row];
    rhs[row] = pos[row];
  }
  std::vector<FieldValue> sol = solveLinear(std::move(m), std::move(rhs));
  return {sol[0], sol[1], sol[2], sol[3]};
}

}  // namespace g2net
