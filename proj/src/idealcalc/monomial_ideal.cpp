#include "fhl/idealcalc/monomial_ideal.hpp"

#include <algorithm>
#include <functional>

namespace fhl {

bool MonomialIdeal::contains(const Monomial& mono) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(mono); });
}

void MonomialIdeal::add(const Monomial& mono) {
  if (contains(mono)) return;
  std::erase_if(gens_, [&](const Monomial& g) { return mono.divides(g); });
  gens_.insert(std::upper_bound(gens_.begin(), gens_.end(), mono, std::greater<>()), mono);
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int k) const {
  std::vector<Monomial> out;
  for (auto& mono : monomials_of_degree(nvars_, k))
    if (!contains(mono)) out.push_back(std::move(mono));
  return out;
}

}  // namespace fhl
