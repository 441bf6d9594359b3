#pragma once

#include <map>
#include <string>

#include "g2net/diagram.hpp"
#include "g2net/field_value.hpp"

namespace g2net {

/// Finite formal sum of diagrams with field coefficients. Terms are merged
/// by canonical code and zero coefficients are dropped, so two combinations
/// are equal iff their term maps are equal.
class LinearCombination {
 public:
  struct Term {
    Diagram diagram;
    FieldValue coeff;
  };

  LinearCombination() = default;

  void add(const Diagram& d, const FieldValue& coeff) {
    if (coeff.isZero()) return;
    std::string key = d.canonicalCode();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{d, coeff});
    } else {
      it->second.coeff += coeff;
      if (it->second.coeff.isZero()) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const FieldValue& scale) {
    for (const auto& [key, term] : other.terms_) {
      FieldValue c = term.coeff * scale;
      if (c.isZero()) continue;
      auto it = terms_.find(key);
      if (it == terms_.end()) {
        terms_.emplace(key, Term{term.diagram, c});
      } else {
        it->second.coeff += c;
        if (it->second.coeff.isZero()) terms_.erase(it);
      }
    }
  }

  const std::map<std::string, Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  bool removeTerm(const std::string& key) { return terms_.erase(key) > 0; }

  bool operator==(const LinearCombination& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [key, term] : terms_) {
      auto it = o.terms_.find(key);
      if (it == o.terms_.end() || !(it->second.coeff == term.coeff)) return false;
    }
    return true;
  }

 private:
  std::map<std::string, Term> terms_;
};

}  // namespace g2net
