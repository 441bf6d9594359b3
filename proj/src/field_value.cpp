#include "g2net/field_value.hpp"

#include <map>

#include "g2net/errors.hpp"

#include <json.hpp>

namespace g2net {

FieldValue::FieldValue(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.isZero()) throw EvalError("division by zero");
  if (num.isZero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly::one();
    return;
  }
  UnitContentSplit n = extractUnitContent(num);
  UnitContentSplit d = extractUnitContent(den);
  LaurentPoly g = polyGcd(n.primitive, d.primitive);
  LaurentPoly nReduced = exactDivide(n.primitive, g);
  LaurentPoly dReduced = exactDivide(d.primitive, g);
  num_ = nReduced.scaled(n.coeff / d.coeff)
             .shifted(n.qShift - d.qShift, n.rShift - d.rShift);
  den_ = dReduced;
}

FieldValue FieldValue::operator-() const {
  FieldValue out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

FieldValue FieldValue::operator+(const FieldValue& o) const {
  return FieldValue(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldValue FieldValue::operator-(const FieldValue& o) const {
  return FieldValue(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldValue FieldValue::operator*(const FieldValue& o) const {
  return FieldValue(num_ * o.num_, den_ * o.den_);
}

FieldValue FieldValue::operator/(const FieldValue& o) const {
  if (o.isZero()) throw EvalError("division by zero");
  return FieldValue(num_ * o.den_, den_ * o.num_);
}

FieldValue FieldValue::inverse() const {
  if (isZero()) throw EvalError("division by zero");
  return FieldValue(den_, num_);
}

FieldValue FieldValue::pow(int e) const {
  if (e == 0) return FieldValue(1);
  FieldValue base = e < 0 ? inverse() : *this;
  unsigned n = e < 0 ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
  FieldValue acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

FieldValue FieldValue::substituteQInverse() const {
  return FieldValue(num_.substituteQInverse(), den_.substituteQInverse());
}

namespace {

// Groups p by the exponent of the eliminated variable; the remaining parts
// are polynomials in the other variable only.
std::map<int, LaurentPoly> collectBy(const LaurentPoly& p, bool byR) {
  std::map<int, LaurentPoly> out;
  for (const auto& [e, c] : p.terms()) {
    if (byR)
      out[e.rExp].addTerm(c, e.qExp, 0);
    else
      out[e.qExp].addTerm(c, 0, e.rExp);
  }
  return out;
}

FieldValue substitutePoly(const LaurentPoly& p, const FieldValue& e, bool byR) {
  FieldValue acc;
  for (const auto& [exp, part] : collectBy(p, byR)) {
    if (exp < 0 && e.isZero())
      throw EvalError("substitution creates a zero denominator");
    acc += FieldValue(part) * e.pow(exp);
  }
  return acc;
}

}  // namespace

FieldValue FieldValue::substituteR(const FieldValue& e) const {
  if (e.num().dependsOnR() || e.den().dependsOnR())
    throw EvalError("substituteR: replacement must be free of r");
  FieldValue n = substitutePoly(num_, e, /*byR=*/true);
  FieldValue d = substitutePoly(den_, e, /*byR=*/true);
  if (d.isZero()) throw EvalError("substitution creates a zero denominator");
  return n / d;
}

FieldValue FieldValue::substituteQ(const FieldValue& e) const {
  if (e.num().dependsOnQ() || e.den().dependsOnQ())
    throw EvalError("substituteQ: replacement must be free of q");
  FieldValue n = substitutePoly(num_, e, /*byR=*/false);
  FieldValue d = substitutePoly(den_, e, /*byR=*/false);
  if (d.isZero()) throw EvalError("substitution creates a zero denominator");
  return n / d;
}

Rational FieldValue::evalNumeric(const Rational& qVal, const Rational& rVal) const {
  if (qVal == 0 || rVal == 0)
    throw EvalError("evalNumeric requires nonzero q and r");
  Rational d = den_.evalAt(qVal, rVal);
  if (d == 0) throw EvalError("evalNumeric: pole at evaluation point");
  return num_.evalAt(qVal, rVal) / d;
}

std::string FieldValue::toString() const {
  if (den_.isOne()) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

namespace {

nlohmann::json polyToJson(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    arr.push_back({it->first.qExp, it->first.rExp, ratToString(it->second)});
  return arr;
}

LaurentPoly polyFromJson(const nlohmann::json& arr) {
  LaurentPoly p;
  for (const auto& term : arr) {
    if (!term.is_array() || term.size() != 3)
      throw ParseError("bad polynomial term in JSON");
    p.addTerm(ratFromString(term[2].get<std::string>()), term[0].get<int>(),
              term[1].get<int>());
  }
  return p;
}

}  // namespace

std::string FieldValue::toJson() const {
  nlohmann::json j;
  j["num"] = polyToJson(num_);
  j["den"] = polyToJson(den_);
  return j.dump();
}

FieldValue FieldValue::fromJson(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("num") || !j.contains("den"))
    throw ParseError("bad FieldValue JSON");
  return FieldValue(polyFromJson(j["num"]), polyFromJson(j["den"]));
}

}  // namespace g2net
