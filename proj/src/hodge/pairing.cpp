#include "fhl/hodge/pairing.hpp"

#include <algorithm>

#include "fhl/error.hpp"

namespace fhl {

namespace {

void check_degree_sigma(const Polynomial& p, const FermatContext& ctx, const char* name) {
  if (p.nvars() != ctx.nvars) throw DomainError(std::string(name) + " has the wrong number of variables");
  if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != ctx.sigma))
    throw DomainError(std::string(name) + " must be homogeneous of degree " + std::to_string(ctx.sigma));
}

Rational factorial(int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r *= Rational(i);
  return r;
}

PairingFlag flag_of(const CyclotomicNumber& c) {
  if (c.is_zero()) return PairingFlag::Zero;
  return c.as_rational() ? PairingFlag::Rational : PairingFlag::Irrational;
}

struct CertificateJob {
  Polynomial p;
  int m;
  std::vector<LinearCycleSpec> specs;
};

CertificateJob prepare(const Polynomial& p, const FermatContext& ctx, bool all) {
  check_degree_sigma(p, ctx, "class polynomial");
  CertificateJob job{p, common_conductor(p.conductor(), ctx.m), {}};
  job.p = promote(p, job.m);
  auto pairings = all ? all_pairings(ctx) : std::vector<std::vector<int>>{default_pairing(ctx)};
  for (const auto& pairing : pairings)
    for (const auto& alpha : all_alpha(ctx)) job.specs.push_back({alpha, pairing});
  return job;
}

CertificateEntry evaluate(const CertificateJob& job, const LinearCycleSpec& spec, const FermatContext& ctx,
                          const Rational& hess) {
  Polynomial l = promote(linear_cycle_poly(spec, ctx), job.m);
  CyclotomicNumber c = socle_coefficient(job.p, l, ctx) * (Rational(1) / hess);
  PairingFlag f = flag_of(c);
  return {spec, std::move(c), f};
}

Certificate summarize(std::vector<CertificateEntry> entries) {
  Certificate cert;
  cert.entries = std::move(entries);
  for (const auto& e : cert.entries) {
    if (e.flag == PairingFlag::Irrational) {
      cert.all_rational = false;
      cert.counterexample = e.spec;
      break;
    }
  }
  return cert;
}

}  // namespace

Rational hessian_coefficient_rational(const FermatContext& ctx) {
  return Rational(static_cast<long>(ctx.d) * (ctx.d - 1)).pow(ctx.nvars);
}

CyclotomicNumber hessian_coefficient(const FermatContext& ctx) {
  return CyclotomicNumber(ctx.m, hessian_coefficient_rational(ctx));
}

CyclotomicNumber socle_coefficient(const Polynomial& p, const Polynomial& q, const FermatContext& ctx) {
  const int M = common_conductor(p.conductor(), q.conductor());
  const Polynomial& small = p.size() <= q.size() ? p : q;
  const Polynomial& large = p.size() <= q.size() ? q : p;
  const Polynomial big = promote(large, M);
  const Monomial s = ctx.socle();
  CyclotomicNumber acc(M);
  for (const auto& [t, c] : small.terms()) {
    if (!t.divides(s)) continue;
    const CyclotomicNumber other = big.coefficient(s / t);
    if (!other.is_zero()) acc += c.promote(M) * other;
  }
  return acc;
}

PairingResult pair_classes(const Polynomial& p, const Polynomial& q, const FermatContext& ctx) {
  check_degree_sigma(p, ctx, "first class");
  check_degree_sigma(q, ctx, "second class");
  const int M = common_conductor(p.conductor(), q.conductor());
  Polynomial prod = reduce_mod_jacobian(promote(p, M) * promote(q, M), ctx);
  const Monomial s = ctx.socle();
  CyclotomicNumber top = prod.coefficient(s);
  prod.add_term(s, -top);
  const Rational hess = hessian_coefficient_rational(ctx);
  CyclotomicNumber c = top * (Rational(1) / hess);
  const Rational f = factorial(ctx.n / 2);
  const Rational scale = -Rational(ctx.d - 1).pow(ctx.nvars) * Rational(ctx.d) / (f * f);
  CyclotomicNumber inter = c * scale;
  return {c, inter, c.as_rational(), inter.as_rational(), std::move(prod)};
}

std::string to_string(PairingFlag f) {
  switch (f) {
    case PairingFlag::Zero:
      return "zero";
    case PairingFlag::Rational:
      return "rational";
    case PairingFlag::Irrational:
      return "irrational";
  }
  return "?";
}

Certificate rationality_certificate(const Polynomial& p, const FermatContext& ctx, bool all_pairings, int jobs) {
  const CertificateJob job = prepare(p, ctx, all_pairings);
  const Rational hess = hessian_coefficient_rational(ctx);
  const long total = static_cast<long>(job.specs.size());
  std::vector<CertificateEntry> entries(total);
#pragma omp parallel for schedule(dynamic, 8) num_threads(std::max(1, jobs))
  for (long i = 0; i < total; ++i) entries[i] = evaluate(job, job.specs[i], ctx, hess);
  return summarize(std::move(entries));
}

Certificate rationality_certificate_serial(const Polynomial& p, const FermatContext& ctx, bool all_pairings) {
  const CertificateJob job = prepare(p, ctx, all_pairings);
  const Rational hess = hessian_coefficient_rational(ctx);
  std::vector<CertificateEntry> entries;
  for (const auto& spec : job.specs) entries.push_back(evaluate(job, spec, ctx, hess));
  return summarize(std::move(entries));
}

}  // namespace fhl
