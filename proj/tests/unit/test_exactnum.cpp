#include <gtest/gtest.h>

#include <random>

#include "fhl/error.hpp"
#include "printers.hpp"
#include "fhl/exactnum/cyclotomic.hpp"
#include "fhl/exactnum/rational.hpp"

using namespace fhl;

namespace {

CyclotomicNumber z(int m, long k) { return root_of_unity(m, k); }

CyclotomicNumber random_element(std::mt19937& rng, int m) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  CyclotomicNumber x(m);
  for (int k = 0; k < m; ++k) x += z(m, k) * Rational(coeff(rng), den(rng));
  return x;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0).str(), "0");
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("22/7").str(), "22/7");
  EXPECT_EQ(Rational::parse("-4/6").str(), "-2/3");
  EXPECT_EQ(Rational::parse("17"), Rational(17));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, Arithmetic) {
  Rational a = Rational::parse("3/4"), b = Rational::parse("-1/6");
  EXPECT_EQ((a + b).str(), "7/12");
  EXPECT_EQ((a * b).str(), "-1/8");
  EXPECT_EQ((a / b).str(), "-9/2");
  EXPECT_EQ(a.pow(-2).str(), "16/9");
  EXPECT_THROW(a / Rational(0), DivisionByZero);
  EXPECT_LT(b, a);
}

TEST(Cyclotomic, PolynomialTable) {
  auto p6 = cyclotomic_polynomial(6);
  ASSERT_EQ(p6.size(), 3u);
  EXPECT_EQ(p6[0], 1);
  EXPECT_EQ(p6[1], -1);
  EXPECT_EQ(p6[2], 1);
  EXPECT_EQ(cyclotomic_polynomial(12).size(), 5u);
  for (int m = 1; m <= 30; ++m) EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(m).size()) - 1, euler_phi(m));
}

TEST(Cyclotomic, ZetaSixSquared) {
  CyclotomicNumber w = z(6, 1);
  EXPECT_EQ(w * w, w - CyclotomicNumber(6, 1));
}

TEST(Cyclotomic, RootTimesInverseRoot) {
  for (int m : {3, 5, 8, 10, 12})
    EXPECT_TRUE((z(m, 1) * z(m, m - 1)).is_one()) << m;
}

TEST(Cyclotomic, VanishingSumOfFifthRoots) {
  CyclotomicNumber s(5);
  for (int k = 0; k < 5; ++k) s += z(5, k);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclotomic, RootOfUnityValues) {
  EXPECT_EQ(z(10, 5), CyclotomicNumber(10, -1));
  CyclotomicNumber i8 = z(8, 2);
  EXPECT_EQ(i8.coord(2), Rational(1));
  EXPECT_EQ(i8 * i8, CyclotomicNumber(8, -1));
  EXPECT_EQ(z(6, 7), z(6, 1));
  EXPECT_EQ(z(6, -1), z(6, 5));
  EXPECT_THROW(z(0, 1), DomainError);
  for (int m : {4, 7, 9, 10}) EXPECT_TRUE(z(m, 3).pow(m).is_one());
}

TEST(Cyclotomic, AsRational) {
  auto r = as_rational(z(5, 1) + z(5, 2) + z(5, 3) + z(5, 4));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, Rational(-1));
  auto s = as_rational(z(6, 1) + z(6, 5));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, Rational(1));
  EXPECT_FALSE(as_rational(z(5, 1) + z(5, 4)).has_value());
}

TEST(Cyclotomic, IrrationalityAgreesWithGoldenMinimalPolynomial) {
  // ζ_5 + ζ_5^{-1} satisfies t² + t − 1 = 0, which has no rational root.
  CyclotomicNumber t = z(5, 1) + z(5, 4);
  EXPECT_TRUE((t * t + t - CyclotomicNumber(5, 1)).is_zero());
  EXPECT_NE(t.coord(2), Rational(0));
}

TEST(Cyclotomic, UnitCircle) {
  CyclotomicNumber i4 = z(4, 1);
  CyclotomicNumber u = (CyclotomicNumber(4, 3) + i4 * Rational(4)) * Rational::parse("1/5");
  EXPECT_TRUE(unit_circle_check(u));
  EXPECT_FALSE(unit_circle_check(CyclotomicNumber(4, 2)));
  CyclotomicNumber g4 = z(8, 1) * u.promote(8);
  EXPECT_TRUE(unit_circle_check(g4));
  EXPECT_FALSE(unit_circle_check(CyclotomicNumber(8)));
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(z(5, 1) / CyclotomicNumber(5), DivisionByZero);
  EXPECT_THROW(z(5, 1) + z(10, 1), ConductorMismatch);
  EXPECT_THROW(CyclotomicNumber::from_coords(5, {Rational(1)}), DomainError);
  EXPECT_THROW(z(6, 1).galois(2), DomainError);
}

TEST(Cyclotomic, StrForm) {
  EXPECT_EQ((z(6, 1) - CyclotomicNumber(6, 1)).str(), "-1 + z");
  EXPECT_EQ((z(5, 2) * Rational::parse("3/5")).str(), "3/5*z^2");
  EXPECT_EQ(CyclotomicNumber(7).str(), "0");
}

TEST(CyclotomicProperty, FieldAxioms) {
  std::mt19937 rng(7);
  for (int m : {4, 5, 8, 10, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      CyclotomicNumber x = random_element(rng, m), y = random_element(rng, m), w = random_element(rng, m);
      EXPECT_EQ((x + y) * w, x * w + y * w);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y) * w, x * (y * w));
      if (!x.is_zero()) {
        EXPECT_TRUE((x * x.inverse()).is_one());
        EXPECT_EQ(x * y / x, y);
      }
    }
  }
}

TEST(CyclotomicProperty, RationalRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    CyclotomicNumber x = random_element(rng, 12);
    auto r = x.as_rational();
    if (r) EXPECT_EQ(CyclotomicNumber(12, *r), x);
    CyclotomicNumber n = CyclotomicNumber(12, x.norm());
    EXPECT_TRUE(n.as_rational().has_value());
  }
}

TEST(CyclotomicProperty, UnitCircleMultiplicative) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    CyclotomicNumber x = random_element(rng, 8), y = random_element(rng, 8);
    if (x.is_zero() || y.is_zero()) continue;
    CyclotomicNumber ux = x / x.conjugate(), uy = y / y.conjugate();
    ASSERT_TRUE(unit_circle_check(ux));
    ASSERT_TRUE(unit_circle_check(uy));
    EXPECT_TRUE(unit_circle_check(ux * uy));
  }
}

TEST(CyclotomicProperty, PromoteDemoteIdentity) {
  std::mt19937 rng(5);
  for (auto [m, M] : {std::pair{3, 6}, {4, 8}, {5, 10}, {3, 12}, {4, 12}, {6, 12}}) {
    for (int trial = 0; trial < 10; ++trial) {
      CyclotomicNumber x = random_element(rng, m);
      CyclotomicNumber y = x.promote(M);
      auto back = y.demote(m);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, x);
      EXPECT_EQ(y * y, (x * x).promote(M));
    }
  }
  EXPECT_FALSE(z(8, 1).demote(4).has_value());
  EXPECT_EQ(z(12, 4).demote(3), z(3, 1));
}

TEST(CyclotomicProperty, GaloisIsAutomorphism) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    CyclotomicNumber x = random_element(rng, 10), y = random_element(rng, 10);
    for (int k : {1, 3, 7, 9}) {
      EXPECT_EQ((x * y).galois(k), x.galois(k) * y.galois(k));
      EXPECT_EQ((x + y).galois(k), x.galois(k) + y.galois(k));
    }
  }
}
