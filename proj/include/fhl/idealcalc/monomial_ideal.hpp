#pragma once

#include <vector>

#include "fhl/multipoly/monomial.hpp"

namespace fhl {

// Monomial ideal kept as its minimal generating set, sorted descending.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool contains(const Monomial& mono) const;
  // Adds mono unless already contained; drops generators it divides.
  void add(const Monomial& mono);

  // Degree-k monomials outside the ideal.
  std::vector<Monomial> standard_monomials(int k) const;
  long count_standard(int k) const { return static_cast<long>(standard_monomials(k).size()); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

}  // namespace fhl
