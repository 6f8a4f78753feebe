#pragma once

#include <compare>
#include <string>
#include <vector>

namespace fhl {

// Exponent vector of x_0^{e_0} ... x_{N-1}^{e_{N-1}}.
// The built-in ordering is lex with x_0 > x_1 > ... (compares e_0 first).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int i, int power = 1);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }
  int degree() const;
  int max_exponent() const;

  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Throws DomainError unless o divides *this.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<int> exps_;
};

// All monomials in `nvars` variables of total degree `degree`, every exponent
// at most `cap` (cap < 0 means unbounded). Returned in descending default lex.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, int cap = -1);

}  // namespace fhl
