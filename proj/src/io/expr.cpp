#include "fhl/io/expr.hpp"

#include <cctype>

#include "fhl/error.hpp"

namespace fhl::io {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars, int m, bool allow_vars)
      : text_(text), nvars_(nvars), m_(m), allow_vars_(allow_vars) {}

  Polynomial parse() {
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, "column " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial constant(const CyclotomicNumber& c) const { return Polynomial::constant(nvars_, c); }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  long small_integer() {
    std::size_t at = pos_;
    std::string s = digits();
    if (s.size() > 9) {
      pos_ = at;
      fail("integer too large");
    }
    return std::stol(s);
  }

  CyclotomicNumber as_constant(const Polynomial& p, std::size_t at, const char* what) {
    if (p.is_zero()) return CyclotomicNumber(m_);
    if (p.degree() != 0 || p.size() != 1) {
      pos_ = at;
      fail(std::string(what) + " needs a constant");
    }
    return p.terms().begin()->second;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip();
        std::size_t at = pos_;
        CyclotomicNumber c = as_constant(unary(), at, "division");
        if (c.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(c.inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    skip();
    std::size_t at = pos_;
    Polynomial base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    long e = small_integer();
    if (!negative) return base.pow(static_cast<int>(e));
    CyclotomicNumber c = as_constant(base, at, "negative power");
    if (c.is_zero()) {
      pos_ = at;
      fail("zero to a negative power");
    }
    return constant(c.pow(-e));
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return constant(CyclotomicNumber(m_, Rational::parse(digits())));
    }
    if (c == 'z') {
      ++pos_;
      return constant(root_of_unity(m_, 1));
    }
    if (c == 'i') {
      if (m_ % 4 != 0) fail("i is not in Q(zeta_" + std::to_string(m_) + ")");
      ++pos_;
      return constant(root_of_unity(m_, m_ / 4));
    }
    if (c == 'x' && allow_vars_) {
      ++pos_;
      std::size_t at = pos_;
      long k = small_integer();
      if (k >= nvars_) {
        pos_ = at;
        fail("variable index out of range");
      }
      return Polynomial::variable(nvars_, m_, static_cast<int>(k));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int nvars_;
  int m_;
  bool allow_vars_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

CyclotomicNumber parse_cyclotomic(std::string_view text, int m) {
  if (m < 1) throw DomainError("conductor must be positive");
  Polynomial p = Parser(text, 0, m, false).parse();
  return p.is_zero() ? CyclotomicNumber(m) : p.terms().begin()->second;
}

Polynomial parse_polynomial(std::string_view text, int nvars, int m) {
  if (m < 1) throw DomainError("conductor must be positive");
  return Parser(text, nvars, m, true).parse();
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

std::vector<CyclotomicNumber> parse_cyclotomic_list(std::string_view text, int m) {
  std::vector<CyclotomicNumber> out;
  auto items = split_list(text);
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      out.push_back(parse_cyclotomic(items[i], m));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), "list item " + std::to_string(i + 1) + ", " + e.where());
    }
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  auto items = split_list(text);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string& s = items[i];
    std::size_t j = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (j == s.size() || s.size() > 10) throw ParseError("expected an integer", "list item " + std::to_string(i + 1));
    for (std::size_t k = j; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw ParseError("expected an integer", "list item " + std::to_string(i + 1));
    }
    out.push_back(std::stoi(s));
  }
  return out;
}

}  // namespace fhl::io
