#include "fhl/exactnum/rational.hpp"

#include <cctype>

#include "fhl/error.hpp"

namespace fhl {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("expected integer numerator in '" + std::string(text) + "'", "offset 0");
  if (slash == std::string_view::npos) return Rational(parse_integer(num), 1);
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-')
    throw ParseError("expected positive integer denominator in '" + std::string(text) + "'",
                     "offset " + std::to_string(slash + 1));
  return Rational(parse_integer(num), parse_integer(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DivisionByZero();
    return Rational(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

}  // namespace fhl
