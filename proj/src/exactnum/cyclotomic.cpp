#include "fhl/exactnum/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "fhl/error.hpp"

namespace fhl {

int euler_phi(int m) {
  if (m <= 0) throw DomainError("euler_phi: m must be positive");
  int result = m;
  int x = m;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

namespace {

// Exact division of integer polynomials, divisor monic. Ascending coefficients.
std::vector<mpz_class> divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> q(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw Error("cyclotomic_polynomial: inexact division");
  return q;
}

long checked_mul_add(long acc, long a, long b) {
  long prod = 0;
  long out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &out))
    throw Error("cyclotomic power table overflow");
  return out;
}

std::shared_ptr<const detail::CyclotomicField> build_field(int m) {
  auto f = std::make_shared<detail::CyclotomicField>();
  f->m = m;
  f->phi = euler_phi(m);
  f->minpoly = cyclotomic_polynomial(m);
  const int phi = f->phi;

  std::vector<long> phi_small(phi + 1);
  for (int j = 0; j <= phi; ++j) {
    if (!f->minpoly[j].fits_slong_p()) throw Error("cyclotomic polynomial coefficient too large");
    phi_small[j] = f->minpoly[j].get_si();
  }

  f->power.assign(m, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int e = 0; e < m; ++e) {
    f->power[e] = cur;
    // Multiply by ζ: shift up, then fold the x^phi coefficient back via Φ_m.
    long top = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < phi; ++j) cur[j] = checked_mul_add(cur[j], -top, phi_small[j]);
  }

  if (m <= 2) {
    f->units = {1};
  } else {
    for (int k = 1; k < m; ++k)
      if (std::gcd(k, m) == 1) f->units.push_back(k);
  }
  return f;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int m) {
  if (m <= 0) throw DomainError("cyclotomic_polynomial: m must be positive");
  std::vector<mpz_class> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int e = 1; e < m; ++e)
    if (m % e == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(e));
  return p;
}

namespace detail {

std::shared_ptr<const CyclotomicField> cyclotomic_field(int m) {
  if (m <= 0) throw DomainError("conductor must be positive, got " + std::to_string(m));
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = build_field(m);
  cache.emplace(m, f);
  return f;
}

}  // namespace detail

int common_conductor(int m1, int m2) { return std::lcm(m1, m2); }

CyclotomicNumber::CyclotomicNumber(int m) : field_(detail::cyclotomic_field(m)), num_(field_->phi) {}

CyclotomicNumber::CyclotomicNumber(int m, const Rational& r) : CyclotomicNumber(m) {
  num_[0] = r.numerator();
  den_ = r.denominator();
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const detail::CyclotomicField> f,
                                   std::vector<mpz_class> num, mpz_class den)
    : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CyclotomicNumber CyclotomicNumber::from_coords(int m, const std::vector<Rational>& coords) {
  CyclotomicNumber z(m);
  if (static_cast<int>(coords.size()) != z.degree())
    throw DomainError("from_coords: expected " + std::to_string(z.degree()) + " coordinates for m=" +
                      std::to_string(m) + ", got " + std::to_string(coords.size()));
  mpz_class den = 1;
  for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  for (std::size_t j = 0; j < coords.size(); ++j)
    z.num_[j] = coords[j].numerator() * (den / coords[j].denominator());
  z.den_ = den;
  z.normalize();
  return z;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int m, long k) {
  if (m <= 0) throw DomainError("root_of_unity: m must be positive");
  CyclotomicNumber z(m);
  const auto& row = z.field_->power[mod_floor(k, m)];
  for (int j = 0; j < z.degree(); ++j) z.num_[j] = row[j];
  return z;
}

void CyclotomicNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  bool all_zero = true;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    all_zero = false;
    if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_)
      if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CyclotomicNumber::check_same(const CyclotomicNumber& o) const {
  if (field_->m != o.field_->m) throw ConductorMismatch(field_->m, o.field_->m);
}

std::vector<Rational> CyclotomicNumber::coords() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.emplace_back(c, den_);
  return out;
}

Rational CyclotomicNumber::coord(int j) const {
  if (j < 0 || j >= degree()) throw DomainError("coord index out of range");
  return Rational(num_[j], den_);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (std::size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  check_same(o);
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += o.num_[j];
  } else {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

void CyclotomicNumber::reduce_from_powers(const std::vector<mpz_class>& by_power) {
  const int phi = field_->phi;
  const int m = field_->m;
  for (auto& c : num_) c = 0;
  for (std::size_t e = 0; e < by_power.size(); ++e) {
    const mpz_class& c = by_power[e];
    if (c == 0) continue;
    if (static_cast<int>(e) < phi) {
      num_[e] += c;
      continue;
    }
    const auto& row = field_->power[e % m];
    for (int j = 0; j < phi; ++j)
      if (row[j] != 0) num_[j] += c * row[j];
  }
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.check_same(b);
  CyclotomicNumber r(a.field_, std::vector<mpz_class>(a.num_.size()), 1);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t phi = a.num_.size();
  if (phi == 1) {
    r.num_[0] = a.num_[0] * b.num_[0];
  } else {
    std::vector<mpz_class> conv(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j)
        if (b.num_[j] != 0) mpz_addmul(conv[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    r.reduce_from_powers(conv);
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  *this = *this * o;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& r) {
  for (auto& c : num_) c *= r.numerator();
  den_ *= r.denominator();
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  check_same(o);
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.field_->m == b.field_->m && a.den_ == b.den_ && a.num_ == b.num_;
}

CyclotomicNumber CyclotomicNumber::galois(long k) const {
  const int m = field_->m;
  if (m <= 2) return *this;
  long kk = mod_floor(k, m);
  if (std::gcd(kk, static_cast<long>(m)) != 1) throw DomainError("galois: k must be coprime to m");
  std::vector<mpz_class> by_power(m);
  for (int j = 0; j < degree(); ++j)
    if (num_[j] != 0) by_power[(j * kk) % m] += num_[j];
  CyclotomicNumber r(field_, std::vector<mpz_class>(num_.size()), 1);
  r.reduce_from_powers(by_power);
  r.den_ = den_;
  r.normalize();
  return r;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto q = as_rational()) return CyclotomicNumber(conductor(), Rational(1) / *q);
  // x^{-1} = (product of the other conjugates) / N(x).
  CyclotomicNumber others(conductor(), Rational(1));
  for (int k : field_->units)
    if (k != 1) others *= galois(k);
  CyclotomicNumber n = *this * others;
  auto nq = n.as_rational();
  if (!nq) throw Error("inverse: norm is not rational (internal error)");
  return others * (Rational(1) / *nq);
}

Rational CyclotomicNumber::norm() const {
  CyclotomicNumber acc(conductor(), Rational(1));
  for (int k : field_->units) acc *= galois(k);
  auto q = acc.as_rational();
  if (!q) throw Error("norm is not rational (internal error)");
  return *q;
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(conductor(), Rational(1));
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::promote(int M) const {
  const int m = conductor();
  if (M <= 0 || M % m != 0)
    throw DomainError("promote: " + std::to_string(m) + " does not divide " + std::to_string(M));
  if (M == m) return *this;
  CyclotomicNumber r(M);
  std::vector<mpz_class> by_power(M);
  const int step = M / m;
  for (int j = 0; j < degree(); ++j) by_power[j * step] = num_[j];
  r.reduce_from_powers(by_power);
  r.den_ = den_;
  r.normalize();
  return r;
}

std::optional<CyclotomicNumber> CyclotomicNumber::demote(int target) const {
  const int m = conductor();
  if (target <= 0 || m % target != 0)
    throw DomainError("demote: " + std::to_string(target) + " does not divide " + std::to_string(m));
  if (target == m) return *this;
  const int rows = degree();
  const int cols = euler_phi(target);
  const int step = m / target;
  // Augmented system [A | x]: column j of A is the image of ζ_target^j.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (int j = 0; j < cols; ++j) {
    const auto& img = field_->power[(j * step) % m];
    for (int i = 0; i < rows; ++i) a[i][j] = Rational(img[i]);
  }
  for (int i = 0; i < rows; ++i) a[i][cols] = Rational(num_[i], den_);

  std::vector<int> pivot_row(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (int k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_row[c] = r++;
  }
  for (int i = r; i < rows; ++i)
    if (!a[i][cols].is_zero()) return std::nullopt;
  std::vector<Rational> y(cols);
  for (int c = 0; c < cols; ++c)
    if (pivot_row[c] >= 0) y[c] = a[pivot_row[c]][cols];
  return from_coords(target, y);
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  for (std::size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return std::nullopt;
  return Rational(num_[0], den_);
}

std::string CyclotomicNumber::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = 0; j < degree(); ++j) {
    if (num_[j] == 0) continue;
    Rational c(num_[j], den_);
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string var = j == 0 ? "" : (j == 1 ? "z" : "z^" + std::to_string(j));
    if (j == 0) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += var;
    } else {
      out += mag.str() + "*" + var;
    }
  }
  return out;
}

bool unit_circle_check(const CyclotomicNumber& z) {
  if (z.is_zero()) return false;
  return (z * z.conjugate()).is_one();
}

}  // namespace fhl
