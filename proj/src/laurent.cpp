#include "g2net/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "g2net/errors.hpp"

namespace g2net {

namespace {

// Internal dense-enough representations for the gcd kernel.
// UniPoly: Z[q] with non-negative exponents. BiPoly: Z[q][r].
using UniPoly = std::map<int, Integer>;
using BiPoly = std::map<int, UniPoly>;

int uniDeg(const UniPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

void uniAddTerm(UniPoly& p, int e, const Integer& c) {
  if (c == 0) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

UniPoly uniMul(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) uniAddTerm(out, ea + eb, ca * cb);
  return out;
}

UniPoly uniScale(const UniPoly& a, const Integer& c) {
  UniPoly out;
  if (c == 0) return out;
  for (const auto& [e, v] : a) out.emplace(e, v * c);
  return out;
}

UniPoly uniSub(const UniPoly& a, const UniPoly& b) {
  UniPoly out = a;
  for (const auto& [e, v] : b) uniAddTerm(out, e, -v);
  return out;
}

Integer uniContent(const UniPoly& p) {
  Integer g = 0;
  for (const auto& [e, v] : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UniPoly uniDivExactInt(const UniPoly& p, const Integer& c) {
  UniPoly out;
  for (const auto& [e, v] : p) {
    Integer q_, r_;
    mpz_tdiv_qr(q_.get_mpz_t(), r_.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    if (r_ != 0) throw InternalError("uniDivExactInt: not divisible");
    out.emplace(e, q_);
  }
  return out;
}

// Primitive part with positive leading coefficient.
UniPoly uniPrimitive(const UniPoly& p) {
  if (p.empty()) return p;
  Integer c = uniContent(p);
  if (p.rbegin()->second < 0) c = -c;
  return uniDivExactInt(p, c);
}

// Exact polynomial division in Z[q]; throws if not exact.
UniPoly uniDivExact(const UniPoly& num, const UniPoly& div) {
  if (div.empty()) throw InternalError("uniDivExact: division by zero");
  UniPoly rem = num, quot;
  const int dDeg = uniDeg(div);
  const Integer& dLc = div.rbegin()->second;
  while (!rem.empty()) {
    int rDeg = uniDeg(rem);
    if (rDeg < dDeg) throw InternalError("uniDivExact: not divisible");
    Integer q_, r_;
    mpz_tdiv_qr(q_.get_mpz_t(), r_.get_mpz_t(), rem.rbegin()->second.get_mpz_t(),
                dLc.get_mpz_t());
    if (r_ != 0) throw InternalError("uniDivExact: leading coeff not divisible");
    UniPoly t{{rDeg - dDeg, q_}};
    quot.emplace(rDeg - dDeg, q_);
    rem = uniSub(rem, uniMul(t, div));
  }
  return quot;
}

// Primitive PRS gcd in Z[q]; result primitive with positive lc.
UniPoly uniGcd(UniPoly a, UniPoly b) {
  if (a.empty()) return uniPrimitive(b);
  if (b.empty()) return uniPrimitive(a);
  Integer ga = uniContent(a), gb = uniContent(b), g0;
  mpz_gcd(g0.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
  a = uniDivExactInt(a, a.rbegin()->second < 0 ? -ga : ga);
  b = uniDivExactInt(b, b.rbegin()->second < 0 ? -gb : gb);
  if (uniDeg(a) < uniDeg(b)) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    UniPoly rem = a;
    const Integer& bLc = b.rbegin()->second;
    while (!rem.empty() && uniDeg(rem) >= uniDeg(b)) {
      int shift = uniDeg(rem) - uniDeg(b);
      Integer rLc = rem.rbegin()->second;
      rem = uniSub(uniScale(rem, bLc), uniMul(UniPoly{{shift, rLc}}, b));
    }
    a = b;
    b = uniPrimitive(rem);
  }
  a = uniPrimitive(a);
  for (auto& [e, v] : a) v *= g0;
  return a;
}

int biDegR(const BiPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

void biAdd(BiPoly& p, int rExp, const UniPoly& c) {
  if (c.empty()) return;
  auto& slot = p[rExp];
  for (const auto& [e, v] : c) uniAddTerm(slot, e, v);
  if (slot.empty()) p.erase(rExp);
}

BiPoly biMulUni(const BiPoly& p, const UniPoly& c, int rShift) {
  BiPoly out;
  for (const auto& [re, uc] : p) biAdd(out, re + rShift, uniMul(uc, c));
  return out;
}

BiPoly biSub(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [re, uc] : b) {
    auto& slot = out[re];
    slot = uniSub(slot, uc);
    if (slot.empty()) out.erase(re);
  }
  return out;
}

UniPoly biContent(const BiPoly& p) {
  UniPoly g;
  for (const auto& [re, uc] : p) g = uniGcd(g, uc);
  return g;
}

BiPoly biDivExactUni(const BiPoly& p, const UniPoly& c) {
  BiPoly out;
  for (const auto& [re, uc] : p) out.emplace(re, uniDivExact(uc, c));
  return out;
}

BiPoly fromLaurent(const LaurentPoly& p) {
  BiPoly out;
  for (const auto& [exps, c] : p.terms()) {
    if (exps.qExp < 0 || exps.rExp < 0 || c.get_den() != 1)
      throw InternalError("polyGcd input must be an integer polynomial");
    uniAddTerm(out[exps.rExp], exps.qExp, c.get_num());
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

LaurentPoly toLaurent(const BiPoly& p) {
  LaurentPoly out;
  for (const auto& [re, uc] : p)
    for (const auto& [qe, v] : uc) out.addTerm(Rational(v), qe, re);
  return out;
}

}  // namespace

void LaurentPoly::addTerm(const Rational& c, int qExp, int rExp) {
  if (c == 0) return;
  Exponents key{rExp, qExp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::isConstant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

int LaurentPoly::minQExp() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.qExp < m) m = e.qExp;
    first = false;
  }
  return m;
}

int LaurentPoly::maxQExp() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.qExp > m) m = e.qExp;
    first = false;
  }
  return m;
}

int LaurentPoly::minRExp() const {
  return terms_.empty() ? 0 : terms_.begin()->first.rExp;
}

int LaurentPoly::maxRExp() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.rExp;
}

bool LaurentPoly::dependsOnQ() const {
  for (const auto& [e, c] : terms_)
    if (e.qExp != 0) return true;
  return false;
}

bool LaurentPoly::dependsOnR() const {
  for (const auto& [e, c] : terms_)
    if (e.rExp != 0) return true;
  return false;
}

Rational LaurentPoly::leadingCoeff() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.addTerm(c, e.qExp, e.rExp);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.addTerm(-c, e.qExp, e.rExp);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      out.addTerm(ca * cb, ea.qExp + eb.qExp, ea.rExp + eb.rExp);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int dq, int dr) const {
  LaurentPoly out;
  for (const auto& [e, v] : terms_)
    out.terms_.emplace(Exponents{e.rExp + dr, e.qExp + dq}, v);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly acc = one();
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::substituteQInverse() const {
  LaurentPoly out;
  for (const auto& [e, v] : terms_)
    out.terms_.emplace(Exponents{e.rExp, -e.qExp}, v);
  return out;
}

Rational LaurentPoly::evalAt(const Rational& qVal, const Rational& rVal) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_)
    acc += c * ratPow(qVal, e.qExp) * ratPow(rVal, e.rExp);
  return acc;
}

std::string LaurentPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c;
    if (c < 0) {
      os << '-';
      mag = -c;
    } else if (!first) {
      os << '+';
    }
    std::vector<std::string> parts;
    if (mag != 1 || (e.qExp == 0 && e.rExp == 0)) parts.push_back(ratToString(mag));
    if (e.qExp == 1)
      parts.push_back("q");
    else if (e.qExp != 0)
      parts.push_back("q^" + std::to_string(e.qExp));
    if (e.rExp == 1)
      parts.push_back("r");
    else if (e.rExp != 0)
      parts.push_back("r^" + std::to_string(e.rExp));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << '*';
      os << parts[i];
    }
    first = false;
  }
  return os.str();
}

UnitContentSplit extractUnitContent(const LaurentPoly& p) {
  UnitContentSplit out;
  if (p.isZero()) {
    out.coeff = 0;
    return out;
  }
  out.qShift = p.minQExp();
  out.rShift = p.minRExp();
  LaurentPoly shifted = p.shifted(-out.qShift, -out.rShift);
  // rational content: gcd of numerators / lcm of denominators
  Integer num = 0, den = 1;
  for (const auto& [e, c] : shifted.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational content(num, den);
  content.canonicalize();
  if (shifted.leadingCoeff() < 0) content = -content;
  out.coeff = content;
  out.primitive = shifted.scaled(1 / content);
  return out;
}

LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.isZero() && b.isZero()) return LaurentPoly();
  BiPoly pa = fromLaurent(a), pb = fromLaurent(b);
  if (pa.empty()) return toLaurent(pb);
  if (pb.empty()) return toLaurent(pa);

  UniPoly ca = biContent(pa), cb = biContent(pb);
  UniPoly contentGcd = uniGcd(ca, cb);
  BiPoly fa = biDivExactUni(pa, ca);
  BiPoly fb = biDivExactUni(pb, cb);
  if (biDegR(fa) < biDegR(fb)) std::swap(fa, fb);
  // primitive PRS in the outer variable r
  while (!fb.empty()) {
    BiPoly rem = fa;
    const UniPoly bLc = fb.rbegin()->second;
    while (!rem.empty() && biDegR(rem) >= biDegR(fb)) {
      int shift = biDegR(rem) - biDegR(fb);
      UniPoly rLc = rem.rbegin()->second;
      rem = biSub(biMulUni(rem, bLc, 0), biMulUni(fb, rLc, shift));
    }
    fa = fb;
    UniPoly cont = biContent(rem);
    fb = rem.empty() ? BiPoly{} : biDivExactUni(rem, cont);
  }
  UniPoly cont = biContent(fa);
  fa = biDivExactUni(fa, cont);
  BiPoly g = biMulUni(fa, contentGcd, 0);

  LaurentPoly out = toLaurent(g);
  if (out.leadingCoeff() < 0) out = -out;
  return out;
}

LaurentPoly exactDivide(const LaurentPoly& num, const LaurentPoly& div) {
  if (div.isZero()) throw InternalError("exactDivide: division by zero");
  if (num.isZero()) return LaurentPoly();
  // Shift both to plain polynomials; net shift goes into the quotient.
  int nq = num.minQExp(), nr = num.minRExp();
  int dq = div.minQExp(), dr = div.minRExp();
  LaurentPoly rem = num.shifted(-nq, -nr);
  LaurentPoly d = div.shifted(-dq, -dr);
  LaurentPoly quot;
  const Exponents dLead = d.terms().rbegin()->first;
  const Rational dLc = d.terms().rbegin()->second;
  while (!rem.isZero()) {
    const Exponents rLead = rem.terms().rbegin()->first;
    int tq = rLead.qExp - dLead.qExp;
    int tr = rLead.rExp - dLead.rExp;
    if (tq < 0 || tr < 0) throw InternalError("exactDivide: not divisible");
    Rational tc = rem.terms().rbegin()->second / dLc;
    LaurentPoly t = LaurentPoly::monomial(tc, tq, tr);
    quot += t;
    rem -= t * d;
  }
  return quot.shifted(nq - dq, nr - dr);
}

}  // namespace g2net
