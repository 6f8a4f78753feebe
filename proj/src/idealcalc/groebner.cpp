#include "fhl/idealcalc/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "fhl/error.hpp"

namespace fhl {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  auto lf = leading_term(f, ord);
  auto lg = leading_term(g, ord);
  Monomial l = lf.monomial.lcm(lg.monomial);
  const CyclotomicNumber one(f.conductor(), 1);
  return f.times_monomial(l / lf.monomial, one / lf.coefficient) -
         g.times_monomial(l / lg.monomial, one / lg.coefficient);
}

std::string to_string(GroebnerStatus s) { return s == GroebnerStatus::Complete ? "complete" : "truncated"; }

GroebnerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord, int degree_cap) {
  GroebnerResult res;
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("buchberger: zero generator");
    if (!g.is_homogeneous()) throw DomainError("buchberger: generators must be homogeneous");
    if (g.degree() > degree_cap) throw DomainError("buchberger: degree cap below a generator degree");
    res.basis.push_back(g);
  }
  std::vector<Monomial> lts;
  for (const auto& g : res.basis) lts.push_back(leading_term(g, ord).monomial);

  // (lcm degree, i, j), processed smallest degree first.
  std::vector<std::tuple<int, int, int>> pairs;
  auto add_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(lts[i].lcm(lts[j]).degree(), i, j);
  };
  for (int j = 0; j < static_cast<int>(res.basis.size()); ++j) add_pairs(j);

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end());
    auto [deg, i, j] = *best;
    pairs.erase(best);
    if (deg > degree_cap) {
      if (lts[i].coprime(lts[j])) {
        ++res.pairs_skipped;
      } else {
        res.status = GroebnerStatus::Truncated;
      }
      continue;
    }
    ++res.pairs_reduced;
    Polynomial r = divide(s_polynomial(res.basis[i], res.basis[j], ord), res.basis, ord).remainder;
    if (r.is_zero()) continue;
    auto lt = leading_term(r, ord);
    r = r.scaled(CyclotomicNumber(r.conductor(), 1) / lt.coefficient);
    res.basis.push_back(r);
    lts.push_back(lt.monomial);
    ++res.added;
    add_pairs(static_cast<int>(res.basis.size()) - 1);
  }
  return res;
}

}  // namespace fhl
