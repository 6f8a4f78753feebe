#include "fhl/hodge/structure.hpp"

#include <algorithm>
#include <set>

#include "fhl/error.hpp"

namespace fhl {

namespace {

int single_variable(const Monomial& mono) {
  for (int i = 0; i < mono.nvars(); ++i)
    if (mono[i] == 1) return i;
  return -1;
}

std::vector<long> quotient_profile(const std::vector<Polynomial>& gens, const FermatContext& ctx, int* socle) {
  std::vector<long> dims;
  *socle = -1;
  for (int k = 0; k <= ctx.sigma + 1; ++k) {
    dims.push_back(jacobian_quotient_dimension(gens, k, ctx));
    if (dims.back() != 0) *socle = k;
  }
  return dims;
}

}  // namespace

ProductClassSpec recover_structure(const Polynomial& p, const FermatContext& ctx) {
  const MonomialOrder lex = MonomialOrder::lex(ctx.nvars);
  DegreeSlice j1 = colon_slice(p, 1, ctx, lex);
  const int slots = ctx.n / 2 + 1;
  if (j1.dim() != slots)
    throw Error("no product structure: dim J_1 = " + std::to_string(j1.dim()) + ", expected " + std::to_string(slots));
  const int m = p.conductor();
  struct Slot {
    int p, q;
    CyclotomicNumber a;
  };
  std::vector<Slot> slot;
  std::set<int> used;
  auto claim = [&](int v) {
    if (!used.insert(v).second) throw Error("violates the product shape: variable x" + std::to_string(v) + " repeats");
  };
  for (const auto& form : j1.basis) {
    auto terms = form.terms_in(lex);
    if (terms.size() > 2) throw Error("violates the product shape: " + form.str() + " is not a binomial");
    int lead = single_variable(terms[0].first);
    claim(lead);
    if (terms.size() == 1) {
      slot.push_back({lead, -1, CyclotomicNumber(m)});
    } else {
      int partner = single_variable(terms[1].first);
      claim(partner);
      slot.push_back({lead, partner, -terms[1].second});
    }
  }
  for (auto& s : slot) {
    if (s.q >= 0) continue;
    int free = 0;
    while (used.count(free)) ++free;
    s.q = free;
    used.insert(free);
  }
  std::sort(slot.begin(), slot.end(), [](const Slot& x, const Slot& y) { return x.p < y.p; });
  ProductClassSpec spec;
  spec.c_lambda = CyclotomicNumber(m, 1);
  for (const auto& s : slot) {
    spec.a.push_back(s.a);
    spec.pairing.push_back(s.p);
    spec.pairing.push_back(s.q);
  }
  Polynomial g = product_class_poly(spec, ctx);
  auto lt = leading_term(g, lex);
  CyclotomicNumber pc = p.coefficient(lt.monomial);
  if (pc.is_zero()) throw Error("violates the product shape: rebuilt class does not match");
  spec.c_lambda = pc / lt.coefficient;
  if (product_class_poly(spec, ctx) != p) throw Error("violates the product shape: rebuilt class does not match");
  return spec;
}

std::optional<CyclotomicNumber> prop11_ratio(const CyclotomicNumber& a, const CyclotomicNumber& x,
                                             const CyclotomicNumber& y, int d) {
  const CyclotomicNumber one(a.conductor(), 1);
  const CyclotomicNumber ad1 = a.pow(d - 1);
  CyclotomicNumber den = (ad1 + y) * (a * x - one);
  if (den.is_zero()) return std::nullopt;
  return (ad1 + x) * (a * y - one) / den;
}

Prop11Report prop11_scan(const CyclotomicNumber& a, int d) {
  if (d < 3) throw DomainError("prop11: d must be at least 3");
  const int M = common_conductor(a.conductor(), 2 * d);
  const CyclotomicNumber A = a.promote(M);
  const CyclotomicNumber zeta = root_of_unity(M, M / (2 * d));
  const CyclotomicNumber one(M, 1);
  Prop11Report rep;
  rep.d = d;
  rep.a = A;
  rep.direct = (A.pow(d) + one).is_zero();
  for (int r = 1; r < 2 * d; r += 2) {
    for (int s = 1; s < 2 * d; s += 2) {
      auto ratio = prop11_ratio(A, zeta.pow(r), zeta.pow(s), d);
      if (!ratio) {
        ++rep.pairs_skipped;
        continue;
      }
      ++rep.pairs_checked;
      if (rep.scan && !ratio->as_rational()) {
        rep.scan = false;
        rep.witness = std::make_pair(r, s);
      }
    }
  }
  const CyclotomicNumber zd = zeta.pow(2);
  rep.cross_ratio = -one - (zd + zd.inverse());
  rep.cross_ratio_rational = rep.cross_ratio.as_rational().has_value();
  if (d >= 4) {
    CyclotomicNumber x1 = zeta, x2 = zeta.pow(3), x3 = zeta.pow(5), x4 = zeta.pow(7);
    CyclotomicNumber phi = (x1 - x2) * (x3 - x4) / ((x1 - x4) * (x3 - x2));
    rep.cross_ratio_from_points = phi.inverse();
  }
  rep.implication_holds = !(rep.scan && !rep.direct && !rep.cross_ratio_rational);
  return rep;
}

PlaneReport plane_in_fermat(const std::vector<Polynomial>& forms, const FermatContext& ctx) {
  if (static_cast<int>(forms.size()) != ctx.n / 2 + 1)
    throw DomainError("expected " + std::to_string(ctx.n / 2 + 1) + " linear forms");
  int M = 1;
  for (const auto& l : forms) {
    if (l.nvars() != ctx.nvars) throw DomainError("linear form has the wrong number of variables");
    if (l.is_zero() || !l.is_homogeneous() || l.degree() != 1) throw DomainError("forms must be linear");
    M = common_conductor(M, l.conductor());
  }
  std::vector<Polynomial> promoted;
  for (const auto& l : forms) promoted.push_back(promote(l, M));
  const MonomialOrder lex = MonomialOrder::lex(ctx.nvars);
  DegreeSlice rref = ideal_slice(promoted, 1, lex);
  if (rref.dim() != static_cast<int>(forms.size())) throw DomainError("linear forms are dependent");
  PlaneReport rep;
  rep.forms = rref.basis;
  auto div = divide(promote(fermat_polynomial(ctx), common_conductor(M, ctx.m)), rep.forms, lex);
  rep.restriction = div.remainder;
  rep.contained = div.remainder.is_zero();
  if (!rep.contained) return rep;
  rep.cofactors = div.quotients;
  for (std::size_t i = 0; i < rep.forms.size(); ++i) {
    rep.ideal.push_back(rep.forms[i]);
    rep.ideal.push_back(rep.cofactors[i]);
  }
  rep.quotient_dims = quotient_profile(rep.ideal, ctx, &rep.socle);
  return rep;
}

CiReport dan_ci_ideal(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g, const FermatContext& ctx) {
  const std::size_t slots = ctx.n / 2 + 1;
  if (f.size() != slots || g.size() != slots)
    throw DomainError("expected " + std::to_string(slots) + " pairs (f_i, g_i)");
  int M = ctx.m;
  for (std::size_t i = 0; i < slots; ++i) {
    for (const auto* h : {&f[i], &g[i]}) {
      if (h->nvars() != ctx.nvars) throw DomainError("factor has the wrong number of variables");
      if (h->is_zero() || !h->is_homogeneous()) throw DomainError("factors must be nonzero and homogeneous");
      M = common_conductor(M, h->conductor());
    }
    if (f[i].degree() + g[i].degree() != ctx.d)
      throw DomainError("deg f_" + std::to_string(i + 1) + " + deg g_" + std::to_string(i + 1) + " must equal d");
  }
  CiReport rep;
  Polynomial sum(ctx.nvars, M);
  for (std::size_t i = 0; i < slots; ++i) {
    rep.generators.push_back(promote(f[i], M));
    rep.generators.push_back(promote(g[i], M));
    sum += rep.generators[2 * i] * rep.generators[2 * i + 1];
  }
  const Polynomial F = promote(fermat_polynomial(ctx), M);
  if (sum != F) throw Error("not a decomposition of F");
  rep.expected_socle = 0;
  for (const auto& h : rep.generators) rep.expected_socle += h.degree() - 1;
  rep.jacobian_contained = true;
  for (int j = 0; j < ctx.nvars && rep.jacobian_contained; ++j)
    rep.jacobian_contained = in_ideal(Polynomial::term(Monomial::variable(ctx.nvars, j, ctx.d - 1), CyclotomicNumber(M, 1)),
                                      rep.generators);
  rep.quotient_dims = quotient_profile(rep.generators, ctx, &rep.socle);
  rep.square = ideal_square_membership(F, rep.generators);
  auto inv = inverse_system(rep.generators, ctx);
  if (inv.size() == 1) rep.class_poly = inv.front();
  return rep;
}

namespace {

Polynomial binomial_form(const FermatContext& ctx, int i, int j, const CyclotomicNumber& a) {
  return Polynomial::variable(ctx.nvars, ctx.m, i) - Polynomial::variable(ctx.nvars, ctx.m, j).scaled(a);
}

void check_odd(int r, int d) {
  if (r < 1 || r > 2 * d - 1 || r % 2 == 0) throw DomainError("root exponents must be odd and in [1, 2d-1]");
}

void add_quadratic_pair(const FermatContext& ctx, int i, int j, int r1, int r2, std::vector<Polynomial>& f,
                        std::vector<Polynomial>& g) {
  check_odd(r1, ctx.d);
  check_odd(r2, ctx.d);
  if (r1 == r2) throw DomainError("quadratic factor needs two distinct roots");
  Polynomial quad = binomial_form(ctx, i, j, root_of_unity(ctx.m, r1)) * binomial_form(ctx, i, j, root_of_unity(ctx.m, r2));
  Polynomial rest = Polynomial::constant(ctx.nvars, CyclotomicNumber(ctx.m, 1));
  for (int r = 1; r < 2 * ctx.d; r += 2)
    if (r != r1 && r != r2) rest = rest * binomial_form(ctx, i, j, root_of_unity(ctx.m, r));
  f.push_back(std::move(quad));
  g.push_back(std::move(rest));
}

}  // namespace

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> mixed_decomposition(const FermatContext& ctx,
                                                                                const std::vector<int>& alpha,
                                                                                int r1, int r2) {
  if (static_cast<int>(alpha.size()) != ctx.n / 2) throw DomainError("expected n/2 linear exponents");
  std::vector<Polynomial> f, g;
  for (int j = 0; j < ctx.n / 2; ++j) {
    check_odd(alpha[j], ctx.d);
    CyclotomicNumber a = root_of_unity(ctx.m, alpha[j]);
    f.push_back(binomial_form(ctx, 2 * j, 2 * j + 1, a));
    g.push_back(geometric_factor(ctx.nvars, 2 * j, 2 * j + 1, a, ctx.d + 1));
  }
  add_quadratic_pair(ctx, ctx.n, ctx.n + 1, r1, r2, f, g);
  return {f, g};
}

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> conic_decomposition(const FermatContext& ctx, int alpha,
                                                                                int r1, int r2) {
  if (ctx.n != 2) throw DomainError("the conic decomposition needs n = 2");
  return mixed_decomposition(ctx, {alpha}, r1, r2);
}

CyclotomicNumber family_prefactor(int d) {
  switch (d) {
    case 3:
      return CyclotomicNumber(6, 1);
    case 4:
      return root_of_unity(8, 1);
    case 6:
      return root_of_unity(12, 3);
    default:
      throw DomainError("special families exist only for d = 3, 4, 6");
  }
}

bool in_family_group(const CyclotomicNumber& a, int d) {
  const CyclotomicNumber pre = family_prefactor(d);
  const int M = 2 * d;
  if (M % a.conductor() != 0 || a.is_zero()) return false;
  const int sub = d == 4 ? 4 : 3;
  auto u = (a.promote(M) / pre).demote(sub);
  return u && unit_circle_check(*u);
}

SpecialFamilyReport special_family(const std::vector<CyclotomicNumber>& a, const FermatContext& ctx, int jobs) {
  family_prefactor(ctx.d);
  if (static_cast<int>(a.size()) != ctx.n / 2 + 1)
    throw DomainError("a must have " + std::to_string(ctx.n / 2 + 1) + " entries");
  SpecialFamilyReport rep;
  rep.spec.pairing = default_pairing(ctx);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!in_family_group(a[j], ctx.d))
      throw DomainError("a_" + std::to_string(2 * j) + " = " + a[j].str() + " is not in G_" + std::to_string(ctx.d));
    rep.spec.a.push_back(a[j].promote(ctx.m));
  }
  rep.spec.c_lambda = CyclotomicNumber(ctx.m, 1);
  const Polynomial base = product_class_poly(rep.spec, ctx);
  const Rational hess = hessian_coefficient_rational(ctx);
  bool found = false;
  for (const auto& alpha : all_alpha(ctx)) {
    CyclotomicNumber c = socle_coefficient(base, linear_cycle_poly({alpha, default_pairing(ctx)}, ctx), ctx) *
                         (Rational(1) / hess);
    if (c.is_zero()) continue;
    rep.alpha_tilde = alpha;
    rep.c_alpha_tilde = c;
    found = true;
    break;
  }
  if (!found) throw Error("all pairing coefficients vanish; cannot normalize");
  rep.spec.c_lambda = rep.c_alpha_tilde.inverse();
  rep.poly = product_class_poly(rep.spec, ctx);
  rep.certificate = rationality_certificate(rep.poly, ctx, false, jobs);
  rep.j1_dim = colon_slice(rep.poly, 1, ctx).dim();
  return rep;
}

}  // namespace fhl
