#include <gtest/gtest.h>

#include <random>

#include "fhl/error.hpp"
#include "fhl/hodge/classes.hpp"
#include "fhl/idealcalc/colon.hpp"
#include "fhl/io/expr.hpp"
#include "fhl/io/json.hpp"
#include "oracle.hpp"
#include "printers.hpp"

using namespace fhl;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(JsonCodec, Rational) {
  Rational r = io::rational_from_json(io::Json("22/7"));
  EXPECT_EQ(r, Rational(22) / Rational(7));
  EXPECT_EQ(io::to_json(r).get<std::string>(), "22/7");
  EXPECT_EQ(io::to_json(Rational(-3)).get<std::string>(), "-3");
  EXPECT_EQ(io::rational_from_json(io::Json(5)), Rational(5));
}

TEST(JsonCodec, Cyclotomic) {
  CyclotomicNumber z = root_of_unity(6, 1) - CyclotomicNumber(6, 1);
  EXPECT_EQ(io::dump(io::to_json(z)), R"({"m":6,"coords":["-1","1"]})");
  EXPECT_EQ(io::cyclotomic_from_json(io::parse_json(R"({"m":6,"coords":["-1","1"]})")), z);
  EXPECT_EQ(io::cyclotomic_from_json(io::to_json(z)), z);
}

TEST(JsonCodec, PolynomialRoundTripIsByteExact) {
  std::mt19937 rng(97);
  for (auto [n, d] : {std::pair{2, 5}, {4, 4}, {2, 3}}) {
    FermatContext ctx(n, d);
    for (const auto& alpha : {all_alpha(ctx).front(), all_alpha(ctx).back()}) {
      Polynomial p = linear_cycle_poly(LinearCycleSpec{alpha, default_pairing(ctx)}, ctx);
      std::string text = io::dump(io::to_json(p));
      Polynomial back = io::polynomial_from_json(io::parse_json(text));
      EXPECT_EQ(back, p);
      EXPECT_EQ(io::dump(io::to_json(back)), text);
    }
    Polynomial q = oracle::random_class(rng, ctx, 7, false);
    EXPECT_EQ(io::polynomial_from_json(io::parse_json(io::dump(io::to_json(q)))), q);
  }
}

TEST(JsonCodec, PolynomialTermsInDefaultOrder) {
  FermatContext ctx(2, 5);
  Polynomial p = linear_cycle_poly(LinearCycleSpec{{1, 3}, default_pairing(ctx)}, ctx);
  io::Json j = io::to_json(p);
  EXPECT_EQ(j["vars"], 4);
  EXPECT_EQ(j["m"], 10);
  std::vector<Monomial> monos;
  for (const auto& t : j["terms"]) {
    monos.emplace_back(t["exp"].get<std::vector<int>>());
    EXPECT_EQ(t["coeff"].size(), 4u);
  }
  EXPECT_TRUE(std::is_sorted(monos.begin(), monos.end(), std::greater<>()));
}

TEST(JsonCodec, ReportsAndSpecs) {
  FermatContext ctx(2, 5);
  LinearCycleSpec spec{{1, 3}, {0, 1, 2, 3}};
  EXPECT_EQ(io::dump(io::to_json(spec)), R"({"alpha":[1,3],"pairing":[0,1,2,3]})");
  EXPECT_EQ(io::linear_cycle_from_json(io::to_json(spec)), spec);
  auto ps = as_product_spec(spec, ctx);
  EXPECT_EQ(io::product_class_from_json(io::to_json(ps)), ps);
  HilbertProfile h{6, {1, 2, 3, 4, 3, 2, 1}};
  EXPECT_EQ(io::dump(io::to_json(h)), R"({"sigma":6,"dims":[1,2,3,4,3,2,1]})");
  DegreeSlice s = colon_slice(linear_cycle_poly(spec, ctx), 1, ctx);
  io::Json js = io::to_json(s);
  EXPECT_EQ(js["k"], 1);
  EXPECT_EQ(js["dim"], 2);
  EXPECT_EQ(io::polynomial_from_json(js["basis"][1]), s.basis[1]);
}

TEST(JsonCodec, MalformedInputCarriesLocation) {
  EXPECT_NE(error_of([] { io::parse_json(R"({"m": 6, "coords": [)"); }).find("byte"), std::string::npos);
  EXPECT_NE(error_of([] { io::cyclotomic_from_json(io::parse_json(R"({"m":6})")); }).find("missing field \"coords\""),
            std::string::npos);
  EXPECT_NE(error_of([] { io::cyclotomic_from_json(io::parse_json(R"({"m":6,"coords":["1"]})")); }).find("/coords"),
            std::string::npos);
  EXPECT_NE(error_of([] { io::cyclotomic_from_json(io::parse_json(R"({"m":6,"coords":["1","x"]})")); })
                .find("/coords/1"),
            std::string::npos);
  EXPECT_NE(error_of([] { io::cyclotomic_from_json(io::parse_json(R"({"m":6,"coords":[0.5,"1"]})")); })
                .find("/coords/0"),
            std::string::npos);
  std::string bad_exp = R"({"vars":2,"m":1,"terms":[{"exp":[1,1],"coeff":["1"]},{"exp":[2],"coeff":["1"]}]})";
  EXPECT_NE(error_of([&] { io::polynomial_from_json(io::parse_json(bad_exp)); }).find("/terms/1/exp"), std::string::npos);
  std::string dup = R"({"vars":1,"m":1,"terms":[{"exp":[1],"coeff":["1"]},{"exp":[1],"coeff":["2"]}]})";
  EXPECT_NE(error_of([&] { io::polynomial_from_json(io::parse_json(dup)); }).find("duplicate"), std::string::npos);
  EXPECT_NE(error_of([] { io::rational_from_json(io::Json("1/0")); }), "");
  EXPECT_NE(error_of([] { io::linear_cycle_from_json(io::parse_json(R"({"alpha":[1,"3"],"pairing":[]})")); })
                .find("/alpha/1"),
            std::string::npos);
}

TEST(Expressions, Cyclotomic) {
  CyclotomicNumber g4 = io::parse_cyclotomic("z*(3+4*i)/5", 8);
  CyclotomicNumber expected = root_of_unity(8, 1) * (CyclotomicNumber(8, 3) + root_of_unity(8, 2) * Rational(4)) *
                              (Rational(1) / Rational(5));
  EXPECT_EQ(g4, expected);
  EXPECT_TRUE(unit_circle_check(g4));
  EXPECT_EQ(io::parse_cyclotomic("-z^2", 10), -root_of_unity(10, 2));
  EXPECT_EQ(io::parse_cyclotomic("2/3", 10), CyclotomicNumber(10, Rational(2) / Rational(3)));
  EXPECT_EQ(io::parse_cyclotomic("z^-1", 10), root_of_unity(10, 9));
  EXPECT_EQ(io::parse_cyclotomic("(1 + z)^2 - 2*z", 10), CyclotomicNumber(10, 1) + root_of_unity(10, 2));
  EXPECT_EQ(io::parse_cyclotomic("2^-2", 1), CyclotomicNumber(1, Rational(1) / Rational(4)));
  EXPECT_EQ(io::parse_cyclotomic("123456789012345678901234567890", 1).as_rational()->str(), "123456789012345678901234567890");
  EXPECT_EQ(io::parse_cyclotomic("i", 12), root_of_unity(12, 3));
}

TEST(Expressions, Errors) {
  EXPECT_NE(error_of([] { io::parse_cyclotomic("i", 6); }).find("column 1"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_cyclotomic("1 + (z", 10); }).find("column 7"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_cyclotomic("z/(z-z)", 10); }).find("division by zero"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_cyclotomic("2z", 10); }).find("column 2"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_cyclotomic("x0", 10); }), "");
  EXPECT_NE(error_of([] { io::parse_cyclotomic("", 10); }).find("empty"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_polynomial("x0/x1", 2, 1); }).find("constant"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_polynomial("x2", 2, 1); }).find("out of range"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_cyclotomic_list("1, z +", 10); }).find("list item 2"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_int_list("1,,3"); }).find("list item 2"), std::string::npos);
}

TEST(Expressions, PolynomialsAndLists) {
  Polynomial p = io::parse_polynomial("x0^2 - z*x1*x2 + 1/2*x2^2", 3, 10);
  Polynomial x0 = Polynomial::variable(3, 10, 0), x1 = Polynomial::variable(3, 10, 1), x2 = Polynomial::variable(3, 10, 2);
  EXPECT_EQ(p, x0.pow(2) - (x1 * x2).scaled(root_of_unity(10, 1)) + x2.pow(2).scaled(CyclotomicNumber(10, Rational(1) / Rational(2))));
  EXPECT_EQ(io::split_list(" z*(1, 2) , 3 ,(4)"), (std::vector<std::string>{"z*(1, 2)", "3", "(4)"}));
  EXPECT_EQ(io::parse_int_list("1, 3,-5"), (std::vector<int>{1, 3, -5}));
  auto a = io::parse_cyclotomic_list("z, 2/3", 10);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[1], CyclotomicNumber(10, Rational(2) / Rational(3)));
}

TEST(Expressions, RoundTripThroughReadableForm) {
  std::mt19937 rng(101);
  for (int m : {5, 8, 10, 12}) {
    for (int trial = 0; trial < 10; ++trial) {
      CyclotomicNumber z = oracle::random_cyclotomic(rng, m, 3);
      EXPECT_EQ(io::parse_cyclotomic(z.str(), m), z) << z.str();
    }
  }
}
