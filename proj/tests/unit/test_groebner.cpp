#include <gtest/gtest.h>

#include <random>

#include "fhl/idealcalc/groebner.hpp"
#include "fhl/idealcalc/ideal.hpp"
#include "oracle.hpp"
#include "printers.hpp"

using namespace fhl;

namespace {

// Oracle: every S-polynomial of the basis divides to zero.
bool all_s_polys_reduce(const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = s_polynomial(basis[i], basis[j], ord);
      if (!divide(s, basis, ord).remainder.is_zero()) return false;
    }
  }
  return true;
}

Polynomial x(int nvars, int m, int i) { return Polynomial::variable(nvars, m, i); }

}  // namespace

TEST(SPolynomial, CancelsLeadingTerms) {
  int m = 10;
  auto ord = MonomialOrder::lex(3);
  Polynomial f = x(3, m, 0).pow(2) - x(3, m, 1) * x(3, m, 2);
  Polynomial g = x(3, m, 0) * x(3, m, 1) - x(3, m, 2).pow(2);
  Polynomial s = s_polynomial(f, g, ord);
  // x1·f − x0·g = −x1²x2 + x0x2²
  EXPECT_EQ(s, x(3, m, 0) * x(3, m, 2).pow(2) - x(3, m, 1).pow(2) * x(3, m, 2));
}

TEST(Buchberger, BinomialWithPowerIsAlreadyGroebner) {
  for (int d : {4, 5, 7}) {
    int m = 2 * d;
    CyclotomicNumber a = root_of_unity(m, 3) + CyclotomicNumber(m, 2);
    std::vector<Polynomial> gens{x(2, m, 0) - x(2, m, 1).scaled(a),
                                 Polynomial::term(Monomial::variable(2, 1, d - 1), CyclotomicNumber(m, 1))};
    auto ord = MonomialOrder::lex(2);
    GroebnerResult r = buchberger(gens, ord, 2 * d);
    EXPECT_EQ(r.added, 0);
    EXPECT_EQ(r.status, GroebnerStatus::Complete);
    EXPECT_EQ(r.basis, gens);
    EXPECT_TRUE(all_s_polys_reduce(gens, ord));
  }
}

TEST(Buchberger, MonomialsAreSelfGroebner) {
  int m = 1;
  std::vector<Polynomial> gens{x(3, m, 0).pow(2) * x(3, m, 1), x(3, m, 1).pow(3), x(3, m, 0) * x(3, m, 2)};
  GroebnerResult r = buchberger(gens, MonomialOrder::lex(3), 8);
  EXPECT_EQ(r.basis, gens);
  EXPECT_EQ(r.added, 0);
}

TEST(Buchberger, ProductClassSystemUnderSplitOrder) {
  std::mt19937 rng(41);
  for (int n : {2, 4}) {
    int d = 5, m = 10, nvars = n + 2;
    std::vector<int> prio;
    for (int i = 0; i < nvars; i += 2) prio.push_back(i);
    for (int i = 1; i < nvars; i += 2) prio.push_back(i);
    MonomialOrder ord(prio);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Polynomial> gens;
      // L_i = x_{2i} + l_i(odd variables)
      for (int i = 0; i < nvars; i += 2) {
        Polynomial l = x(nvars, m, i);
        for (int j = 1; j < nvars; j += 2) {
          if (rng() % 2) l += x(nvars, m, j).scaled(oracle::random_cyclotomic(rng, m, 1));
        }
        gens.push_back(l);
      }
      for (int j = 1; j < nvars; j += 2)
        gens.push_back(Polynomial::term(Monomial::variable(nvars, j, d - 1), CyclotomicNumber(m, 1)));
      GroebnerResult r = buchberger(gens, ord, 2 * d);
      EXPECT_EQ(r.added, 0);
      EXPECT_EQ(r.status, GroebnerStatus::Complete);
      EXPECT_TRUE(all_s_polys_reduce(gens, ord));
    }
  }
}

TEST(Buchberger, CompletesTwistedCubic) {
  int m = 1;
  auto ord = MonomialOrder::lex(4);
  // 2x2 minors of [[x0, x1, x2], [x1, x2, x3]]
  std::vector<Polynomial> gens{x(4, m, 0) * x(4, m, 2) - x(4, m, 1).pow(2),
                               x(4, m, 0) * x(4, m, 3) - x(4, m, 1) * x(4, m, 2),
                               x(4, m, 1) * x(4, m, 3) - x(4, m, 2).pow(2)};
  GroebnerResult r = buchberger(gens, ord, 6);
  EXPECT_EQ(r.status, GroebnerStatus::Complete);
  EXPECT_TRUE(all_s_polys_reduce(r.basis, ord));
  for (const auto& g : r.basis) EXPECT_TRUE(in_ideal(g, gens));
}

TEST(Buchberger, AddsElementsWhenNeeded) {
  int m = 1;
  auto ord = MonomialOrder::lex(3);
  std::vector<Polynomial> gens{x(3, m, 0).pow(2) - x(3, m, 1) * x(3, m, 2), x(3, m, 0) * x(3, m, 1) - x(3, m, 2).pow(2)};
  GroebnerResult full = buchberger(gens, ord, 12);
  EXPECT_GT(full.added, 0);
  EXPECT_TRUE(all_s_polys_reduce(full.basis, ord));
  for (std::size_t i = gens.size(); i < full.basis.size(); ++i) {
    EXPECT_TRUE(leading_term(full.basis[i], ord).coefficient.is_one());
    EXPECT_TRUE(in_ideal(full.basis[i], gens));
  }
  GroebnerResult cut = buchberger(gens, ord, 3);
  EXPECT_EQ(cut.status, GroebnerStatus::Truncated);
}
