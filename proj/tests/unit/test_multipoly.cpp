#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fhl/error.hpp"
#include "printers.hpp"
#include "fhl/multipoly/polynomial.hpp"

using namespace fhl;

namespace {

Polynomial var(int nvars, int m, int i) { return Polynomial::variable(nvars, m, i); }
CyclotomicNumber c(int m, long v) { return CyclotomicNumber(m, v); }

Polynomial random_homogeneous(std::mt19937& rng, int nvars, int m, int degree, int terms) {
  auto monos = monomials_of_degree(nvars, degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<long> k(0, m - 1);
  Polynomial p(nvars, m);
  for (int t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], root_of_unity(m, k(rng)) * Rational(coeff(rng)));
  return p;
}

}  // namespace

TEST(Monomial, Basics) {
  Monomial a({2, 0, 1}), b({1, 1, 0});
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ((a * b).exps(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(a.lcm(b).exps(), (std::vector<int>{2, 1, 1}));
  EXPECT_TRUE(Monomial({1, 0, 1}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_THROW(a / b, DomainError);
  EXPECT_TRUE(Monomial({1, 0, 0}).coprime(Monomial({0, 2, 1})));
  EXPECT_EQ(a.str(), "x0^2*x2");
}

TEST(Monomial, Enumeration) {
  auto all = monomials_of_degree(4, 3);
  EXPECT_EQ(all.size(), 20u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
  auto capped = monomials_of_degree(4, 6, 3);
  EXPECT_EQ(capped.size(), 44u);
  for (const auto& m : capped) EXPECT_LE(m.max_exponent(), 3);
}

TEST(MonomialOrder, Validation) {
  EXPECT_THROW(MonomialOrder({0, 0, 1}), DomainError);
  EXPECT_THROW(MonomialOrder({0, 3}), DomainError);
  MonomialOrder o({1, 0});
  EXPECT_TRUE(o.greater(Monomial({0, 1}), Monomial({1, 0})));
}

TEST(Polynomial, TelescopingIdentity) {
  std::mt19937 rng(1);
  for (int d : {2, 3, 4, 5, 7}) {
    int m = 2 * d;
    for (long k = 0; k < m; ++k) {
      CyclotomicNumber a = root_of_unity(m, k) * Rational(k + 1);
      Polynomial lhs = (var(4, m, 0) - var(4, m, 1).scaled(a)) * geometric_factor(4, 0, 1, a, d);
      Polynomial rhs = var(4, m, 0).pow(d - 1) - var(4, m, 1).scaled(a).pow(d - 1);
      EXPECT_EQ(lhs, rhs) << "d=" << d << " k=" << k;
    }
  }
}

TEST(Polynomial, GeometricFactorSmallCases) {
  CyclotomicNumber a = root_of_unity(10, 3);
  EXPECT_EQ(geometric_factor(4, 0, 1, a, 3), var(4, 10, 0) + var(4, 10, 1).scaled(a));
  Polynomial g = geometric_factor(4, 2, 3, c(10, 1), 5);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.degree(), 3);
  for (const auto& [mono, coeff] : g.terms()) EXPECT_TRUE(coeff.is_one());
  EXPECT_THROW(geometric_factor(4, 1, 1, a, 5), DomainError);
}

TEST(Polynomial, ZeroAndSubstitution) {
  int m = 10;
  Polynomial f = var(2, m, 0).pow(5) + var(2, m, 1).pow(5);
  EXPECT_TRUE((f * Polynomial(2, m)).is_zero());
  CyclotomicNumber a = root_of_unity(m, 1);
  EXPECT_TRUE(f.substitute(0, var(2, m, 1).scaled(a)).is_zero());
  EXPECT_FALSE(f.substitute(0, var(2, m, 1).scaled(c(m, 2))).is_zero());
  EXPECT_THROW(f + var(3, m, 0), DomainError);
  EXPECT_THROW(f + var(2, 5, 0), ConductorMismatch);
}

TEST(Polynomial, LeadingTerms) {
  int m = 10;
  CyclotomicNumber a = root_of_unity(m, 3);
  Polynomial f = var(2, m, 0) - var(2, m, 1).scaled(a);
  auto lt = leading_term(f, MonomialOrder::lex(2));
  EXPECT_EQ(lt.monomial, Monomial({1, 0}));
  EXPECT_TRUE(lt.coefficient.is_one());
  auto lt2 = leading_term(f, MonomialOrder({1, 0}));
  EXPECT_EQ(lt2.monomial, Monomial({0, 1}));
  EXPECT_EQ(lt2.coefficient, -a);
  Polynomial g = var(2, m, 1).pow(4) + var(2, m, 0) * var(2, m, 1).pow(3);
  EXPECT_EQ(leading_term(g, MonomialOrder::lex(2)).monomial, Monomial({1, 3}));
  EXPECT_THROW(leading_term(Polynomial(2, m), MonomialOrder::lex(2)), DomainError);
}

TEST(Division, RepeatedSubstitution) {
  int m = 10;
  CyclotomicNumber a = root_of_unity(m, 1) * Rational(3);
  Polynomial f = var(2, m, 0).pow(2);
  auto res = divide(f, {var(2, m, 0) - var(2, m, 1).scaled(a)}, MonomialOrder::lex(2));
  EXPECT_EQ(res.remainder, var(2, m, 1).pow(2).scaled(a * a));
}

TEST(Division, MonomialDivisorsStripJacobianMultiples) {
  int d = 4, m = 8, nv = 4;
  std::vector<Polynomial> jac;
  for (int i = 0; i < nv; ++i) jac.push_back(var(nv, m, i).pow(d - 1));
  std::mt19937 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f = random_homogeneous(rng, nv, m, 6, 15);
    auto res = divide(f, jac, MonomialOrder::lex(nv));
    Polynomial expected(nv, m);
    for (const auto& [mono, coeff] : f.terms())
      if (mono.max_exponent() < d - 1) expected.add_term(mono, coeff);
    EXPECT_EQ(res.remainder, expected);
  }
}

TEST(DivisionProperty, Reassembly) {
  std::mt19937 rng(4);
  int nv = 4, m = 10;
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = random_homogeneous(rng, nv, m, 4, 10);
    std::vector<Polynomial> divs{random_homogeneous(rng, nv, m, 2, 3), random_homogeneous(rng, nv, m, 1, 2)};
    if (divs[0].is_zero() || divs[1].is_zero()) continue;
    for (const auto& ord : {MonomialOrder::lex(nv), MonomialOrder({2, 0, 3, 1})}) {
      auto res = divide(f, divs, ord);
      Polynomial back = res.remainder;
      for (std::size_t i = 0; i < divs.size(); ++i) back += res.quotients[i] * divs[i];
      EXPECT_EQ(back, f);
      std::vector<LeadingTerm> lts;
      for (const auto& g : divs) lts.push_back(leading_term(g, ord));
      for (const auto& [mono, coeff] : res.remainder.terms())
        for (const auto& lt : lts) EXPECT_FALSE(lt.monomial.divides(mono));
    }
  }
}

TEST(PolynomialProperty, LeadingTermMultiplicative) {
  std::mt19937 rng(6);
  int nv = 4, m = 6;
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = random_homogeneous(rng, nv, m, 3, 5), g = random_homogeneous(rng, nv, m, 2, 4);
    if (f.is_zero() || g.is_zero()) continue;
    MonomialOrder ord({3, 1, 0, 2});
    auto lf = leading_term(f, ord), lg = leading_term(g, ord), lfg = leading_term(f * g, ord);
    EXPECT_EQ(lfg.monomial, lf.monomial * lg.monomial);
    EXPECT_EQ(lfg.coefficient, lf.coefficient * lg.coefficient);
  }
}
