#include "fhl/multipoly/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "fhl/error.hpp"

namespace fhl {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw DomainError("monomial exponent must be non-negative");
}

Monomial Monomial::variable(int nvars, int i, int power) {
  if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[i] = power;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

int Monomial::max_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw DomainError("monomial quotient: " + o.str() + " does not divide " + str());
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  return true;
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void enumerate(int var, int remaining, int cap, std::vector<int>& cur, std::vector<Monomial>& out) {
  const int n = static_cast<int>(cur.size());
  if (var == n - 1) {
    if (cap >= 0 && remaining > cap) return;
    cur[var] = remaining;
    out.emplace_back(cur);
    cur[var] = 0;
    return;
  }
  int top = cap >= 0 ? std::min(cap, remaining) : remaining;
  for (int e = top; e >= 0; --e) {
    cur[var] = e;
    enumerate(var + 1, remaining - e, cap, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree, int cap) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars <= 0) return out;
  std::vector<int> cur(nvars, 0);
  enumerate(0, degree, cap, cur, out);
  return out;
}

}  // namespace fhl
