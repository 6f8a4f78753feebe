#pragma once

#include <string>
#include <vector>

#include "fhl/multipoly/monomial.hpp"

namespace fhl {

// Lexicographic order after permuting variables: x_{p[0]} > x_{p[1]} > ...
class MonomialOrder {
 public:
  static MonomialOrder lex(int nvars);
  // `priority` must be a permutation of 0..N-1; throws DomainError otherwise.
  explicit MonomialOrder(std::vector<int> priority);

  int nvars() const { return static_cast<int>(priority_.size()); }
  const std::vector<int>& priority() const { return priority_; }

  // -1, 0, 1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    for (int v : priority_) {
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string str() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<int> priority_;
};

}  // namespace fhl
