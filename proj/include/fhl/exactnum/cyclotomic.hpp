#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fhl/exactnum/rational.hpp"

namespace fhl {

namespace detail {

// Immutable per-conductor tables, shared by every number of that conductor.
struct CyclotomicField {
  int m = 1;
  int phi = 1;
  std::vector<mpz_class> minpoly;         // Φ_m, ascending coefficients, monic, degree phi
  std::vector<std::vector<long>> power;   // power[e] = coords of ζ_m^e, 0 <= e < m
  std::vector<int> units;                 // 1 <= k < m with gcd(k, m) = 1 ({1} when m <= 2)
};

std::shared_ptr<const CyclotomicField> cyclotomic_field(int m);

}  // namespace detail

// Euler's totient.
int euler_phi(int m);

// Φ_m as ascending integer coefficients, obtained by dividing x^m - 1 by
// Φ_e for every proper divisor e of m.
std::vector<mpz_class> cyclotomic_polynomial(int m);

// Element of Q(ζ_m) in the power basis 1, ζ_m, ..., ζ_m^{φ(m)-1}.
// Stored as integer numerators over one positive common denominator,
// normalized so that gcd(den, all numerators) = 1. That makes the
// representation unique and equality a coordinate comparison.
class CyclotomicNumber {
 public:
  // Zero of Q(ζ_m).
  explicit CyclotomicNumber(int m = 1);
  CyclotomicNumber(int m, const Rational& r);
  CyclotomicNumber(int m, long v) : CyclotomicNumber(m, Rational(v)) {}

  static CyclotomicNumber from_coords(int m, const std::vector<Rational>& coords);
  // ζ_m^k, any integer k.
  static CyclotomicNumber root_of_unity(int m, long k);

  int conductor() const { return field_->m; }
  int degree() const { return field_->phi; }
  std::vector<Rational> coords() const;
  Rational coord(int j) const;

  bool is_zero() const;
  bool is_one() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& r);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& r) { return a *= r; }
  friend CyclotomicNumber operator*(const Rational& r, CyclotomicNumber a) { return a *= r; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;
  // The automorphism ζ ↦ ζ^k, gcd(k, m) = 1.
  CyclotomicNumber galois(long k) const;
  // Complex conjugation ζ ↦ ζ^{-1}.
  CyclotomicNumber conjugate() const { return galois(-1); }
  // Product of all Galois conjugates; always rational.
  Rational norm() const;

  // Embedding into Q(ζ_M), m | M.
  CyclotomicNumber promote(int M) const;
  // Preimage in Q(ζ_target) when target | m and the value lies there.
  std::optional<CyclotomicNumber> demote(int target) const;

  std::optional<Rational> as_rational() const;

  // Readable form in the symbol z = ζ_m, e.g. "-1 + z" or "3/5*z^2".
  std::string str() const;

  // Raw representation (for hashing and serialization).
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

 private:
  CyclotomicNumber(std::shared_ptr<const detail::CyclotomicField> f, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  void check_same(const CyclotomicNumber& o) const;
  void reduce_from_powers(const std::vector<mpz_class>& by_power);

  std::shared_ptr<const detail::CyclotomicField> field_;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

inline CyclotomicNumber root_of_unity(int m, long k) { return CyclotomicNumber::root_of_unity(m, k); }
inline std::optional<Rational> as_rational(const CyclotomicNumber& z) { return z.as_rational(); }
// z · conj(z) == 1.
bool unit_circle_check(const CyclotomicNumber& z);
// Smallest common conductor.
int common_conductor(int m1, int m2);

}  // namespace fhl
