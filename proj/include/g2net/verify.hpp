#pragma once

#include <string>
#include <vector>

#include "g2net/field_value.hpp"

namespace g2net {

/// A bundled reference diagram with its expected exact value.
struct BundledExample {
  std::string name;
  std::string net;  // NET-format text, crossing convention baked in
  FieldValue expected;
};

/// unknot, kink, hopf, trefoil, figure-eight, theta, K4.
const std::vector<BundledExample>& bundledExamples();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The full internal oracle suite: coefficient identities, eigenvalue-table
/// algebra, root-data re-derivation, Rosso-Jones value, rule closures,
/// mutation tests, crossing-relation residuals, Reidemeister moves, mirror
/// and multiplicativity checks, and the bundled example values.
std::vector<CheckResult> runAllChecks();

}  // namespace g2net
