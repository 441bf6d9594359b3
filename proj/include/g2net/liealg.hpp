#pragma once

#include <array>
#include <vector>

#include "g2net/field_value.hpp"

namespace g2net {

/// Dominant integral weight in the fundamental-weight basis.
struct Weight {
  long m1 = 0;
  long m2 = 0;
};

/// g2 root data in short-root normalisation: simple roots a1 (short) and a2
/// (long) with Gram matrix [[2, -3], [-3, 6]]. All inner products are exact
/// integers; the Killing normalisation enters only as division by the
/// adjoint Casimir value.
struct RootDataG2 {
  /// Coordinates in the simple-root basis.
  struct RootVec {
    long a1 = 0;
    long a2 = 0;
  };

  static long inner(RootVec x, RootVec y) {
    return 2 * x.a1 * y.a1 - 3 * (x.a1 * y.a2 + x.a2 * y.a1) + 6 * x.a2 * y.a2;
  }

  /// The six positive roots.
  static const std::array<RootVec, 6>& positiveRoots() {
    static const std::array<RootVec, 6> roots{
        RootVec{1, 0}, RootVec{0, 1}, RootVec{1, 1},
        RootVec{2, 1}, RootVec{3, 1}, RootVec{3, 2}};
    return roots;
  }

  /// omega1 = 2a1+a2, omega2 = 3a1+2a2.
  static RootVec toRootBasis(Weight w) {
    return {2 * w.m1 + 3 * w.m2, w.m1 + 2 * w.m2};
  }

  /// Half-sum of positive roots doubled = sum of positive roots = delta.
  static RootVec deltaVec() { return {5, 3}; }

  /// Highest weights of the four summands of V (x) V: C, V, L, W.
  static const std::array<Weight, 4>& summandHighestWeights() {
    static const std::array<Weight, 4> weights{Weight{0, 0}, Weight{1, 0},
                                               Weight{0, 1}, Weight{2, 0}};
    return weights;
  }
};

/// Weyl dimension formula; exact integer arithmetic.
long weylDimension(Weight lambda);

/// (lambda, lambda + 2 delta) normalised so the adjoint weight gives 1.
/// Throws EvalError for non-dominant weights.
Rational casimirEigenvalue(Weight lambda);

/// Eigenvalues of the two-strand chord on the summands C, V, L, W, in units
/// of hhat^2/h: exactly (1/2, 1/4, 0, -1/12).
std::array<Rational, 4> chordEigenvalues();

/// Inner products (lambda_V + delta, alpha) over the positive roots.
std::vector<long> rossoJonesNumeratorExponents();
/// Inner products (delta, alpha) over the positive roots.
std::vector<long> rossoJonesDenominatorExponents();

/// The quantum dimension of V as the Weyl-character product
/// prod (u^m - u^-m)/(u^n - u^-n), an exact Laurent polynomial in u
/// (stored in the q slot). Equals the free-loop value at q = u^2.
LaurentPoly rossoJonesUnknot();

/// Rebuilds the crossing eigenvalue table from the chord eigenvalues and
/// the flip signs, solves the resulting linear system over the field and
/// returns (alpha, beta, gamma, delta). Independent of the coeffs module.
std::array<FieldValue, 4> deriveSkeinCoefficients();

}  // namespace g2net
