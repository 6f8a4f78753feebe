#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fhl/exactnum/cyclotomic.hpp"
#include "fhl/multipoly/monomial.hpp"
#include "fhl/multipoly/order.hpp"

namespace fhl {

// Sparse polynomial over Q(ζ_m) in a fixed number of variables.
// Zero coefficients are never stored. Terms iterate in descending default
// lex order (x_0 > x_1 > ...).
class Polynomial {
 public:
  using TermMap = std::map<Monomial, CyclotomicNumber, std::greater<Monomial>>;
  using Term = std::pair<Monomial, CyclotomicNumber>;

  explicit Polynomial(int nvars = 0, int m = 1) : nvars_(nvars), m_(m) {}
  static Polynomial constant(int nvars, const CyclotomicNumber& c);
  static Polynomial variable(int nvars, int m, int i);
  static Polynomial term(const Monomial& mono, const CyclotomicNumber& c);

  int nvars() const { return nvars_; }
  int conductor() const { return m_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  CyclotomicNumber coefficient(const Monomial& mono) const;

  // Adds c·mono, dropping the term if it cancels.
  void add_term(const Monomial& mono, const CyclotomicNumber& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const CyclotomicNumber& c) const;
  Polynomial times_monomial(const Monomial& mono, const CyclotomicNumber& c) const;
  Polynomial pow(int e) const;

  // x_var ↦ value everywhere.
  Polynomial substitute(int var, const Polynomial& value) const;

  // Terms sorted descending in `ord`.
  std::vector<Term> terms_in(const MonomialOrder& ord) const;

  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  int nvars_;
  int m_;
  TermMap terms_;
};

struct LeadingTerm {
  Monomial monomial;
  CyclotomicNumber coefficient;
};

// Throws DomainError for the zero polynomial.
LeadingTerm leading_term(const Polynomial& f, const MonomialOrder& ord);

// Embedding of the coefficients into Q(ζ_M), m | M.
Polynomial promote(const Polynomial& p, int M);

// Σ_{p+q=d-2} x_i^p a^q x_j^q. Requires i != j and d >= 2.
Polynomial geometric_factor(int nvars, int i, int j, const CyclotomicNumber& a, int d);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division. At each step the leading term of the running
// dividend goes to the first divisor (in list order) whose leading monomial
// divides it, else to the remainder. Guarantees f = Σ q_i g_i + r.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& ord);

}  // namespace fhl
