#include "fhl/multipoly/polynomial.hpp"

#include <algorithm>

#include "fhl/error.hpp"

namespace fhl {

Polynomial Polynomial::constant(int nvars, const CyclotomicNumber& c) {
  return term(Monomial::one(nvars), c);
}

Polynomial Polynomial::variable(int nvars, int m, int i) {
  return term(Monomial::variable(nvars, i), CyclotomicNumber(m, 1));
}

Polynomial Polynomial::term(const Monomial& mono, const CyclotomicNumber& c) {
  Polynomial p(mono.nvars(), c.conductor());
  p.add_term(mono, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) {
    if (d < 0) d = mono.degree();
    else if (mono.degree() != d) return false;
  }
  return true;
}

CyclotomicNumber Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? CyclotomicNumber(m_) : it->second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw DomainError("polynomial variable count mismatch: " + std::to_string(nvars_) + " vs " +
                      std::to_string(o.nvars_));
  if (m_ != o.m_) throw ConductorMismatch(m_, o.m_);
}

void Polynomial::add_term(const Monomial& mono, const CyclotomicNumber& c) {
  if (mono.nvars() != nvars_) throw DomainError("monomial has wrong variable count");
  if (c.conductor() != m_) throw ConductorMismatch(m_, c.conductor());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.nvars_, a.m_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const CyclotomicNumber& c) const {
  Polynomial r(nvars_, m_);
  if (c.is_zero()) return r;
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono, coeff * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& mono, const CyclotomicNumber& c) const {
  Polynomial r(nvars_, m_);
  if (c.is_zero()) return r;
  // Multiplying by a monomial preserves the term order.
  for (const auto& [m, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, coeff * c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("polynomial power must be non-negative");
  Polynomial result = constant(nvars_, CyclotomicNumber(m_, 1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  check_compatible(value);
  if (var < 0 || var >= nvars_) throw DomainError("substitute: variable index out of range");
  std::vector<Polynomial> powers{constant(nvars_, CyclotomicNumber(m_, 1))};
  Polynomial r(nvars_, m_);
  for (const auto& [mono, c] : terms_) {
    int e = mono[var];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    std::vector<int> rest = mono.exps();
    rest[var] = 0;
    r += powers[e].times_monomial(Monomial(rest), c);
  }
  return r;
}

std::vector<Polynomial::Term> Polynomial::terms_in(const MonomialOrder& ord) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    std::string cs = c.str();
    bool compound = cs.find(' ') != std::string::npos;
    bool negative = !compound && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.degree() == 0) {
      out += compound ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      out += mono.str();
    } else {
      out += (compound ? "(" + cs + ")" : cs) + "*" + mono.str();
    }
  }
  return out;
}

LeadingTerm leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw DomainError("leading_term of the zero polynomial");
  auto it = f.terms().begin();
  const Monomial* best = &it->first;
  const CyclotomicNumber* coeff = &it->second;
  for (++it; it != f.terms().end(); ++it) {
    if (ord.greater(it->first, *best)) {
      best = &it->first;
      coeff = &it->second;
    }
  }
  return {*best, *coeff};
}

Polynomial promote(const Polynomial& p, int M) {
  if (M == p.conductor()) return p;
  Polynomial r(p.nvars(), M);
  for (const auto& [mono, c] : p.terms()) r.add_term(mono, c.promote(M));
  return r;
}

Polynomial geometric_factor(int nvars, int i, int j, const CyclotomicNumber& a, int d) {
  if (i == j) throw DomainError("geometric_factor: i and j must differ");
  if (d < 2) throw DomainError("geometric_factor: d must be at least 2");
  if (i < 0 || j < 0 || i >= nvars || j >= nvars) throw DomainError("geometric_factor: index out of range");
  Polynomial r(nvars, a.conductor());
  CyclotomicNumber apow(a.conductor(), 1);
  for (int q = 0; q <= d - 2; ++q) {
    std::vector<int> e(nvars, 0);
    e[i] = d - 2 - q;
    e[j] = q;
    r.add_term(Monomial(std::move(e)), apow);
    apow *= a;
  }
  return r;
}

namespace {

struct OrderGreater {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
};

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& ord) {
  const int nvars = f.nvars();
  const int m = f.conductor();
  std::vector<LeadingTerm> lts;
  lts.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.nvars() != nvars) throw DomainError("divide: variable count mismatch");
    if (g.conductor() != m) throw ConductorMismatch(m, g.conductor());
    lts.push_back(leading_term(g, ord));
  }

  std::map<Monomial, CyclotomicNumber, OrderGreater> p{OrderGreater{&ord}};
  for (const auto& [mono, c] : f.terms()) p.emplace(mono, c);

  DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(nvars, m)), Polynomial(nvars, m)};
  while (!p.empty()) {
    auto top = p.begin();
    Monomial lm = top->first;
    CyclotomicNumber lc = top->second;
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!lts[i].monomial.divides(lm)) continue;
      Monomial q = lm / lts[i].monomial;
      CyclotomicNumber qc = lc / lts[i].coefficient;
      out.quotients[i].add_term(q, qc);
      for (const auto& [gm, gc] : divisors[i].terms()) {
        Monomial t = gm * q;
        CyclotomicNumber delta = -(gc * qc);
        auto [it, inserted] = p.try_emplace(t, delta);
        if (!inserted) {
          it->second += delta;
          if (it->second.is_zero()) p.erase(it);
        }
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder.add_term(lm, lc);
      p.erase(p.begin());
    }
  }
  return out;
}

}  // namespace fhl
