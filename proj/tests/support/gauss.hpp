#pragma once

// Exact Gaussian elimination over the rationals, on coefficient vectors of
// elements. Serves as the linear-algebra oracle for span membership and for
// rank (linear independence) evidence.

#include <map>
#include <vector>

#include "lpa/element.hpp"

namespace lpa::testing {

class RationalSpan {
 public:
  // Inserts the vector; returns true if it enlarged the span.
  bool insert(const std::map<lpa::Monomial, lpa::Coefficient>& vec) {
    std::map<lpa::Monomial, lpa::Coefficient> row = reduce(vec);
    if (row.empty()) return false;
    // normalize so the leading coefficient is 1
    lpa::Coefficient lead = row.begin()->second;
    for (auto& [m, c] : row) c /= lead;
    rows_.emplace(row.begin()->first, std::move(row));
    return true;
  }

  bool insert(const lpa::LpaElement& x) { return insert(x.terms()); }

  bool contains(const lpa::LpaElement& x) const { return reduce(x.terms()).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<lpa::Monomial, lpa::Coefficient> reduce(
      std::map<lpa::Monomial, lpa::Coefficient> vec) const {
    while (!vec.empty()) {
      auto it = rows_.find(vec.begin()->first);
      if (it == rows_.end()) break;
      lpa::Coefficient factor = vec.begin()->second;
      for (const auto& [m, c] : it->second) {
        auto [slot, fresh] = vec.try_emplace(m, 0);
        slot->second -= factor * c;
        if (slot->second == 0) vec.erase(slot);
      }
    }
    return vec;
  }

  // echelon rows keyed by their leading monomial
  std::map<lpa::Monomial, std::map<lpa::Monomial, lpa::Coefficient>> rows_;
};

}  // namespace lpa::testing
