#include "fhl/idealcalc/context.hpp"

#include <limits>

#include "fhl/error.hpp"

namespace fhl {

FermatContext::FermatContext(int n_, int d_) : n(n_), d(d_) {
  if (n < 2 || n % 2 != 0) throw DomainError("n must be even and at least 2, got " + std::to_string(n));
  if (d < 3) throw DomainError("d must be at least 3, got " + std::to_string(d));
  sigma = (d - 2) * (n / 2 + 1);
  m = 2 * d;
  nvars = n + 2;
}

Monomial FermatContext::socle() const { return Monomial(std::vector<int>(nvars, d - 2)); }

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) {
    long num = n - k + i;
    if (r > std::numeric_limits<long>::max() / num) throw DomainError("binomial overflow");
    r = r * num / i;
  }
  return r;
}

long full_dimension(const FermatContext& ctx, int k) { return k < 0 ? 0 : binomial(ctx.n + 1 + k, k); }

Polynomial fermat_polynomial(const FermatContext& ctx) {
  Polynomial f(ctx.nvars, ctx.m);
  for (int i = 0; i < ctx.nvars; ++i) f.add_term(Monomial::variable(ctx.nvars, i, ctx.d), CyclotomicNumber(ctx.m, 1));
  return f;
}

Polynomial reduce_mod_jacobian(const Polynomial& p, const FermatContext& ctx) {
  if (p.nvars() != ctx.nvars) throw DomainError("polynomial has the wrong number of variables");
  Polynomial r(p.nvars(), p.conductor());
  for (const auto& [mono, c] : p.terms())
    if (ctx.reduced(mono)) r.add_term(mono, c);
  return r;
}

std::vector<Monomial> reduced_monomials(const FermatContext& ctx, int k) {
  return monomials_of_degree(ctx.nvars, k, ctx.d - 2);
}

}  // namespace fhl
