#pragma once

#include <string>
#include <vector>

#include "fhl/multipoly/polynomial.hpp"

namespace fhl {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

enum class GroebnerStatus { Complete, Truncated };

struct GroebnerResult {
  std::vector<Polynomial> basis;  // the input generators followed by added elements (monic)
  int added = 0;
  long pairs_reduced = 0;
  long pairs_skipped = 0;  // above the cap with coprime leading monomials
  GroebnerStatus status = GroebnerStatus::Complete;
};

std::string to_string(GroebnerStatus s);

// Buchberger completion for homogeneous generators. Every S-pair whose lcm
// has degree <= degree_cap is reduced. A pair above the cap is skipped when
// its leading monomials are coprime; any other such pair makes the result
// Truncated.
GroebnerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord, int degree_cap);

}  // namespace fhl
