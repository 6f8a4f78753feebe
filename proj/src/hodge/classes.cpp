#include "fhl/hodge/classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fhl/error.hpp"

namespace fhl {

std::vector<int> default_pairing(const FermatContext& ctx) {
  std::vector<int> p(ctx.nvars);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void validate_pairing(const std::vector<int>& pairing, const FermatContext& ctx) {
  if (static_cast<int>(pairing.size()) != ctx.nvars)
    throw DomainError("pairing must list all " + std::to_string(ctx.nvars) + " coordinates");
  std::vector<bool> seen(ctx.nvars, false);
  for (int v : pairing) {
    if (v < 0 || v >= ctx.nvars || seen[v]) throw DomainError("pairing is not a permutation of the coordinates");
    seen[v] = true;
  }
}

void validate(const LinearCycleSpec& spec, const FermatContext& ctx) {
  if (static_cast<int>(spec.alpha.size()) != ctx.n / 2 + 1)
    throw DomainError("alpha must have " + std::to_string(ctx.n / 2 + 1) + " entries");
  for (int a : spec.alpha)
    if (a < 1 || a > 2 * ctx.d - 1 || a % 2 == 0)
      throw DomainError("alpha entries must be odd and in [1, " + std::to_string(2 * ctx.d - 1) + "], got " +
                        std::to_string(a));
  validate_pairing(spec.pairing, ctx);
}

void validate(const ProductClassSpec& spec, const FermatContext& ctx) {
  if (static_cast<int>(spec.a.size()) != ctx.n / 2 + 1)
    throw DomainError("a must have " + std::to_string(ctx.n / 2 + 1) + " entries");
  if (spec.c_lambda.is_zero()) throw DomainError("c_lambda must be nonzero");
  for (const auto& a : spec.a)
    if (a.conductor() != spec.conductor()) throw ConductorMismatch(spec.conductor(), a.conductor());
  validate_pairing(spec.pairing, ctx);
}

ProductClassSpec as_product_spec(const LinearCycleSpec& spec, const FermatContext& ctx) {
  validate(spec, ctx);
  ProductClassSpec out;
  for (int a : spec.alpha) out.a.push_back(root_of_unity(ctx.m, a));
  out.c_lambda = root_of_unity(ctx.m, std::accumulate(spec.alpha.begin(), spec.alpha.end(), 0L));
  out.pairing = spec.pairing;
  return out;
}

Polynomial product_class_poly(const ProductClassSpec& spec, const FermatContext& ctx) {
  validate(spec, ctx);
  Polynomial p = Polynomial::constant(ctx.nvars, spec.c_lambda);
  for (std::size_t j = 0; j < spec.a.size(); ++j)
    p = p * geometric_factor(ctx.nvars, spec.pairing[2 * j], spec.pairing[2 * j + 1], spec.a[j], ctx.d);
  return p;
}

Polynomial linear_cycle_poly(const LinearCycleSpec& spec, const FermatContext& ctx) {
  return product_class_poly(as_product_spec(spec, ctx), ctx);
}

std::vector<Polynomial> linear_forms(const ProductClassSpec& spec, const FermatContext& ctx) {
  validate(spec, ctx);
  std::vector<Polynomial> out;
  const int m = spec.conductor();
  for (std::size_t j = 0; j < spec.a.size(); ++j) {
    Polynomial l = Polynomial::variable(ctx.nvars, m, spec.pairing[2 * j]);
    l -= Polynomial::variable(ctx.nvars, m, spec.pairing[2 * j + 1]).scaled(spec.a[j]);
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::vector<int>> all_alpha(const FermatContext& ctx) {
  const int slots = ctx.n / 2 + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(slots, 1);
  while (true) {
    out.push_back(cur);
    int j = slots - 1;
    while (j >= 0 && cur[j] == 2 * ctx.d - 1) cur[j--] = 1;
    if (j < 0) break;
    cur[j] += 2;
  }
  return out;
}

std::vector<std::vector<int>> all_pairings(const FermatContext& ctx) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(ctx.nvars, false);
  std::function<void()> rec = [&]() {
    int first = 0;
    while (first < ctx.nvars && used[first]) ++first;
    if (first == ctx.nvars) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    for (int second = first + 1; second < ctx.nvars; ++second) {
      if (used[second]) continue;
      used[second] = true;
      cur.push_back(first);
      cur.push_back(second);
      rec();
      cur.resize(cur.size() - 2);
      used[second] = false;
    }
    used[first] = false;
  };
  rec();
  return out;
}

}  // namespace fhl
