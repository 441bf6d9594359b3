#include "g2net/verify.hpp"

#include <functional>
#include <sstream>

#include "g2net/braid.hpp"
#include "g2net/coeffs.hpp"
#include "g2net/diagram.hpp"
#include "g2net/errors.hpp"
#include "g2net/liealg.hpp"
#include "g2net/reduce.hpp"
#include "g2net/skein.hpp"

namespace g2net {

namespace {

LaurentPoly qPoly(std::initializer_list<std::pair<int, int>> coeffExp) {
  LaurentPoly p;
  for (const auto& [c, e] : coeffExp) p.addTerm(Rational(c), e, 0);
  return p;
}

FieldValue hopfExpected() {
  return coefficientTable().sevenC *
         FieldValue(qPoly({{1, 7}, {1, 5}, {1, 2}, {1, 0}, {1, -2}, {1, -5}, {1, -7}}));
}

FieldValue trefoilExpected() {
  return coefficientTable().sevenC *
         FieldValue(qPoly({{1, 8},   {1, 6},   {-1, 5},  {1, 3},  {-1, 2},
                           {1, 1},   {-1, 0},  {1, -1},  {1, -4}, {-2, -5},
                           {2, -6},  {-1, -7}, {-1, -9}, {-1, -10},
                           {1, -11}, {-1, -12}, {1, -13}}));
}

FieldValue figureEightExpected() {
  return coefficientTable().sevenC *
         FieldValue(qPoly({{1, 14},  {-1, 13}, {2, 12},  {-2, 11}, {1, 9},
                           {-2, 8},  {4, 7},   {-4, 6},  {4, 5},   {-2, 4},
                           {-1, 3},  {3, 2},   {-5, 1},  {5, 0},   {-5, -1},
                           {3, -2},  {-1, -3}, {-2, -4}, {4, -5},  {-4, -6},
                           {4, -7},  {-2, -8}, {1, -9},  {-2, -11}, {2, -12},
                           {-1, -13}, {1, -14}}));
}

FieldValue k4Expected() {
  const FieldValue q = FieldValue::q();
  return -coefficientTable().sevenC * q *
         (q * q - q + FieldValue(1)) / (q.pow(4) + FieldValue(1)) *
         FieldValue::r().pow(2);
}

}  // namespace

const std::vector<BundledExample>& bundledExamples() {
  static const std::vector<BundledExample> examples = [] {
    const CoefficientTable& tab = coefficientTable();
    std::vector<BundledExample> out;
    out.push_back({"unknot", "O\n", tab.sevenC});
    out.push_back({"kink", "X 1 2 2 1\n", FieldValue::qPow(6) * tab.sevenC});
    out.push_back({"hopf", "X 4 3 1 2\nX 2 1 3 4\n", hopfExpected()});
    out.push_back({"trefoil", "X 4 3 1 2\nX 6 5 3 4\nX 2 1 5 6\n",
                   trefoilExpected()});
    out.push_back({"figure-eight",
                   "X 5 4 1 2\nX 6 5 3 7\nX 9 1 4 6\nX 2 9 7 3\n",
                   figureEightExpected()});
    out.push_back({"theta", "V 1 2 3\nV 3 2 1\n", tab.sevenC * FieldValue::r()});
    out.push_back({"k4", "V 1 4 3\nV 2 5 1\nV 3 6 2\nV 4 5 6\n", k4Expected()});
    return out;
  }();
  return examples;
}

namespace {

using Check = std::function<bool(std::string&)>;

void runCheck(std::vector<CheckResult>& out, const std::string& name,
              const Check& check) {
  CheckResult result;
  result.name = name;
  try {
    result.pass = check(result.detail);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = e.what();
  }
  out.push_back(std::move(result));
}

bool expectEqual(const FieldValue& got, const FieldValue& want,
                 std::string& detail) {
  if (got == want) return true;
  detail = "got " + got.toString() + ", want " + want.toString();
  return false;
}

}  // namespace

std::vector<CheckResult> runAllChecks() {
  std::vector<CheckResult> out;
  const CoefficientTable& tab = coefficientTable();
  const FieldValue q = FieldValue::q();
  const FieldValue r = FieldValue::r();
  const FieldValue one(1);

  runCheck(out, "coefficient identity gamma*7c", [&](std::string& detail) {
    return expectEqual(tab.gamma * tab.sevenC,
                       FieldValue(qPoly({{-1, 7}, {1, -6}, {-1, 1}, {1, 0}})),
                       detail);
  });
  runCheck(out, "coefficient identity lambda(1-alpha^2)", [&](std::string& d) {
    return expectEqual(tab.lambda * (one - tab.alpha * tab.alpha),
                       tab.alpha * tab.gamma + tab.beta, d);
  });
  runCheck(out, "coefficient identity mu(1-alpha^2)", [&](std::string& d) {
    return expectEqual(tab.mu * (one - tab.alpha * tab.alpha),
                       tab.alpha * tab.beta + tab.gamma, d);
  });
  runCheck(out, "coefficient identity rho(1-alpha^2)", [&](std::string& d) {
    return expectEqual(tab.rho * (one - tab.alpha * tab.alpha), tab.delta, d);
  });
  runCheck(out, "coefficient identity sigma = alpha rho", [&](std::string& d) {
    return expectEqual(tab.sigma, tab.alpha * tab.rho, d);
  });
  runCheck(out, "coefficient identity t delta", [&](std::string& d) {
    return expectEqual(tab.t * tab.delta,
                       -q.pow(3) + tab.alpha * q.pow(-3) - tab.gamma, d);
  });
  runCheck(out, "coefficient identity d g = r q^3", [&](std::string& d) {
    return expectEqual(tab.d * tab.g, r * q.pow(3), d);
  });

  runCheck(out, "eigenvalue table satisfies the exchange relation",
           [&](std::string& d) {
             const EigenvalueTable& table = eigenvalueTable();
             for (int row = 0; row < 4; ++row) {
               FieldValue rhs = tab.alpha * table[row][1] +
                                tab.beta * table[row][2] +
                                tab.gamma * table[row][3] +
                                tab.delta * table[row][4];
               if (!(table[row][0] == rhs)) {
                 d = "row " + std::to_string(row);
                 return false;
               }
             }
             return true;
           });

  runCheck(out, "Weyl dimensions (1, 7, 14, 27), total 49", [&](std::string& d) {
    const auto& weights = RootDataG2::summandHighestWeights();
    const std::array<long, 4> want{1, 7, 14, 27};
    long total = 0;
    for (int i = 0; i < 4; ++i) {
      long dim = weylDimension(weights[i]);
      total += dim;
      if (dim != want[i]) {
        d = "summand " + std::to_string(i) + " has dimension " +
            std::to_string(dim);
        return false;
      }
    }
    if (total != 49) {
      d = "total " + std::to_string(total);
      return false;
    }
    return true;
  });

  runCheck(out, "Casimir ratios (0, 1/2, 1, 7/6)", [&](std::string& d) {
    const auto& weights = RootDataG2::summandHighestWeights();
    const std::array<Rational, 4> want{Rational(0), Rational(1, 2), Rational(1),
                                       Rational(7, 6)};
    for (int i = 0; i < 4; ++i) {
      if (casimirEigenvalue(weights[i]) != want[i]) {
        d = "summand " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  runCheck(out, "chord eigenvalues (1/2, 1/4, 0, -1/12)", [&](std::string& d) {
    const std::array<Rational, 4> want{Rational(1, 2), Rational(1, 4),
                                       Rational(0), Rational(-1, 12)};
    auto got = chordEigenvalues();
    for (int i = 0; i < 4; ++i) {
      if (got[i] != want[i]) {
        d = "summand " + std::to_string(i) + ": " + got[i].get_str();
        return false;
      }
    }
    return true;
  });

  runCheck(out, "root-data derivation matches the coefficient table",
           [&](std::string& d) {
             auto derived = deriveSkeinCoefficients();
             return expectEqual(derived[0], tab.alpha, d) &&
                    expectEqual(derived[1], tab.beta, d) &&
                    expectEqual(derived[2], tab.gamma, d) &&
                    expectEqual(derived[3], tab.delta, d);
           });

  runCheck(out, "Weyl-character unknot value equals 7c at q = u^2",
           [&](std::string& d) {
             LaurentPoly rj = rossoJonesUnknot();
             LaurentPoly want;
             for (const auto& [e, c] : tab.sevenC.num().terms())
               want.addTerm(c, 2 * e.qExp, e.rExp);
             if (rj == want) return true;
             d = "got " + rj.toString();
             return false;
           });

  runCheck(out, "rule closures hold", [&](std::string& d) {
    ClosureReport report = verifyRuleClosures();
    for (const auto& item : report.items) {
      if (!item.pass) {
        d = item.name + ": " + item.detail;
        return false;
      }
    }
    return true;
  });

  runCheck(out, "mutation: perturbed gamma breaks the crossing relation",
           [&](std::string& d) {
             CoefficientTable bad = tab;
             bad.gamma += one;
             MemoCache cache;
             Diagram kink = parseNet("X 1 2 2 1\n");
             FieldValue residual = theorem4Residual(kink, 0, cache, bad);
             if (residual.isZero()) {
               d = "residual stayed zero";
               return false;
             }
             return true;
           });

  runCheck(out, "mutation: swapped pentagon shapes break the closures",
           [&](std::string& d) {
             RuleOptions opts;
             opts.swapPentagonShapes = true;
             ClosureReport report = verifyRuleClosures(opts);
             for (const auto& item : report.items) {
               if (item.name.rfind("pentagon", 0) == 0 && !item.pass) return true;
             }
             d = "all pentagon closures still passed";
             return false;
           });

  runCheck(out, "crossing-relation residual vanishes (kink, hopf)",
           [&](std::string& d) {
             MemoCache cache;
             for (const auto& text : {std::string("X 1 2 2 1\n"),
                                      std::string("X 4 3 1 2\nX 2 1 3 4\n")}) {
               Diagram diagram = parseNet(text);
               for (int v = 0; v < diagram.nodeCount(); ++v) {
                 FieldValue residual = theorem4Residual(diagram, v, cache);
                 if (!residual.isZero()) {
                   d = "residual " + residual.toString();
                   return false;
                 }
               }
             }
             return true;
           });

  runCheck(out, "bundled examples evaluate to their expected values",
           [&](std::string& d) {
             MemoCache cache;
             for (const BundledExample& ex : bundledExamples()) {
               FieldValue got = evaluate(parseNet(ex.net), cache);
               if (!(got == ex.expected)) {
                 d = ex.name + ": got " + got.toString();
                 return false;
               }
             }
             return true;
           });

  runCheck(out, "curl factors are q^6 and q^-6", [&](std::string& d) {
    MemoCache cache;
    FieldValue plus = evaluate(parseNet("X 1 2 2 1\n"), cache);
    FieldValue minus = evaluate(parseNet("X 1 2 2 1\n").mirror(), cache);
    return expectEqual(plus, FieldValue::qPow(6) * tab.sevenC, d) &&
           expectEqual(minus, FieldValue::qPow(-6) * tab.sevenC, d);
  });

  runCheck(out, "vertex twist factors are -q^3 and -q^-3", [&](std::string& d) {
    MemoCache cache;
    FieldValue thetaValue = tab.sevenC * r;
    // Theta with the two legs of one vertex crossed, both handednesses.
    FieldValue twistA =
        evaluate(parseNet("V 4 5 3\nV 3 2 1\nX 1 4 5 2\n"), cache);
    FieldValue twistB =
        evaluate(parseNet("V 4 5 3\nV 3 2 1\nX 2 1 4 5\n"), cache);
    FieldValue wantPlus = -q.pow(3) * thetaValue;
    FieldValue wantMinus = -q.pow(-3) * thetaValue;
    bool matches = (twistA == wantPlus && twistB == wantMinus) ||
                   (twistA == wantMinus && twistB == wantPlus);
    if (!matches)
      d = "twists gave " + twistA.toString() + " and " + twistB.toString();
    return matches;
  });

  runCheck(out, "Reidemeister II on braid closures", [&](std::string& d) {
    MemoCache cache;
    FieldValue plain = evaluate(braidClosure({2, {}}), cache);
    FieldValue poked = evaluate(braidClosure({2, {1, -1}}), cache);
    FieldValue plain3 = evaluate(braidClosure({3, {2, 2}}), cache);
    FieldValue poked3 = evaluate(braidClosure({3, {2, 1, -1, 2}}), cache);
    return expectEqual(poked, plain, d) && expectEqual(poked3, plain3, d);
  });

  runCheck(out, "Reidemeister III on braid closures", [&](std::string& d) {
    MemoCache cache;
    FieldValue left = evaluate(braidClosure({3, {1, 2, 1}}), cache);
    FieldValue right = evaluate(braidClosure({3, {2, 1, 2}}), cache);
    FieldValue left2 = evaluate(braidClosure({3, {1, 2, 1, -2, 1}}), cache);
    FieldValue right2 = evaluate(braidClosure({3, {2, 1, 2, -2, 1}}), cache);
    return expectEqual(left, right, d) && expectEqual(left2, right2, d);
  });

  runCheck(out, "mirror rule on bundled examples", [&](std::string& d) {
    MemoCache cache;
    for (const BundledExample& ex : bundledExamples()) {
      Diagram diagram = parseNet(ex.net);
      FieldValue mirrored = evaluate(diagram.mirror(), cache);
      FieldValue substituted = evaluate(diagram, cache).substituteQInverse();
      if (!(mirrored == substituted)) {
        d = ex.name;
        return false;
      }
    }
    return true;
  });

  runCheck(out, "disjoint unions multiply", [&](std::string& d) {
    MemoCache cache;
    Diagram theta = parseNet("V 1 2 3\nV 3 2 1\n");
    Diagram k4 = parseNet("V 1 4 3\nV 2 5 1\nV 3 6 2\nV 4 5 6\n");
    Diagram kink = parseNet("X 1 2 2 1\n");
    FieldValue joint = evaluate(disjointUnion(theta, k4), cache);
    FieldValue split = evaluate(theta, cache) * evaluate(k4, cache);
    FieldValue joint2 = evaluate(disjointUnion(kink, theta), cache);
    FieldValue split2 = evaluate(kink, cache) * evaluate(theta, cache);
    return expectEqual(joint, split, d) && expectEqual(joint2, split2, d);
  });

  runCheck(out, "memoization does not change values", [&](std::string& d) {
    Diagram trefoil = parseNet("X 4 3 1 2\nX 6 5 3 4\nX 2 1 5 6\n");
    MemoCache cache;
    RuleOptions noCache;
    noCache.useCache = false;
    MemoCache unusedCache;
    FieldValue with = evaluate(trefoil, cache);
    FieldValue without = evaluate(trefoil, unusedCache, nullptr, noCache);
    return expectEqual(with, without, d);
  });

  return out;
}

}  // namespace g2net
