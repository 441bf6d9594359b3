#pragma once

#include <array>

#include "g2net/field_value.hpp"

namespace g2net {

/// The named constants of the skein and mesh relations, as exact field
/// elements. sevenC is the value of a free loop (the quantum dimension),
/// alpha..delta the crossing-exchange coefficients, lambda..sigma the
/// crossing-resolution coefficients, and t, g, d the mesh coefficients.
struct CoefficientTable {
  FieldValue sevenC;
  FieldValue alpha, beta, gamma, delta;
  FieldValue lambda, mu, rho, sigma;
  FieldValue t;
  FieldValue g;
  FieldValue d;
};

/// Builds the table from the closed-form definitions. The independent
/// re-derivation from root data lives in liealg and is compared against
/// this in the verification suite.
const CoefficientTable& coefficientTable();

/// Indices into the eigenvalue table.
enum class Summand { C = 0, V = 1, L = 2, W = 3 };
enum class TangleOp {
  positiveCrossing = 0,
  negativeCrossing = 1,
  identity = 2,
  cupCap = 3,
  hTree = 4,
};

/// Eigenvalues of the five elementary 2-strand tangles on the four
/// irreducible summands of V (x) V; rows C, V, L, W.
using EigenvalueTable = std::array<std::array<FieldValue, 5>, 4>;
const EigenvalueTable& eigenvalueTable();

/// r = -(q^2+q+1+q^-2+q^-3+q^-4), the specialisation recovering the
/// quantum-group skein relation with no free parameter.
FieldValue kuperbergR();

}  // namespace g2net
