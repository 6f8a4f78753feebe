#include "fhl/idealcalc/ideal.hpp"

#include <algorithm>
#include <map>

#include "fhl/error.hpp"

namespace fhl {

namespace {

void check_gens(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw DomainError("empty generator list");
  for (const auto& g : gens) {
    if (g.is_zero() || !g.is_homogeneous()) throw DomainError("generators must be nonzero and homogeneous");
    if (g.nvars() != gens.front().nvars()) throw DomainError("generators have different variable counts");
    if (g.conductor() != gens.front().conductor()) throw ConductorMismatch(gens.front().conductor(), g.conductor());
  }
}

std::map<Monomial, int> index_of(const std::vector<Monomial>& monos) {
  std::map<Monomial, int> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], static_cast<int>(i));
  return idx;
}

SparseRow to_row(const Polynomial& p, const std::map<Monomial, int>& index) {
  SparseRow row;
  for (const auto& [mono, c] : p.terms()) row.emplace_back(index.at(mono), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::vector<Monomial> sorted_descending(std::vector<Monomial> monos, const MonomialOrder& ord) {
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return monos;
}

// Echelon of the span of reduce?(μ g) over the given column monomials.
SparseEchelon span_echelon(const std::vector<Polynomial>& gens, int k, const std::vector<Monomial>& columns,
                           const FermatContext* ctx) {
  const auto index = index_of(columns);
  const int nvars = gens.front().nvars();
  SparseEchelon ech(static_cast<int>(columns.size()), gens.front().conductor());
  for (const auto& g : gens) {
    int e = g.degree();
    if (e > k) continue;
    for (const auto& mu : monomials_of_degree(nvars, k - e)) {
      if (ech.full()) return ech;
      if (ctx && !ctx->reduced(mu)) continue;
      Polynomial p = g.times_monomial(mu, CyclotomicNumber(g.conductor(), 1));
      if (ctx) p = reduce_mod_jacobian(p, *ctx);
      if (!p.is_zero()) ech.insert(to_row(p, index));
    }
  }
  return ech;
}

}  // namespace

DegreeSlice ideal_slice(const std::vector<Polynomial>& gens, int k, const MonomialOrder& ord) {
  check_gens(gens);
  if (k < 0) throw DomainError("slice degree must be non-negative");
  const int nvars = gens.front().nvars();
  const auto columns = sorted_descending(monomials_of_degree(nvars, k), ord);
  SparseEchelon ech = span_echelon(gens, k, columns, nullptr);
  ech.reduce_fully();
  DegreeSlice slice;
  slice.k = k;
  for (const auto& row : ech.rows()) slice.basis.push_back(combine(row, columns, nvars, gens.front().conductor()));
  return slice;
}

bool in_ideal(const Polynomial& q, const std::vector<Polynomial>& gens) {
  check_gens(gens);
  if (q.is_zero()) return true;
  if (!q.is_homogeneous()) throw DomainError("in_ideal: polynomial must be homogeneous");
  const int k = q.degree();
  const auto columns = monomials_of_degree(q.nvars(), k);
  const auto index = index_of(columns);
  SparseEchelon ech = span_echelon(gens, k, columns, nullptr);
  return ech.normal_form(to_row(q, index)).empty();
}

DegreeSlice ideal_slice_mod_jacobian(const std::vector<Polynomial>& gens, int k, const FermatContext& ctx,
                                     const MonomialOrder& ord) {
  check_gens(gens);
  if (k < 0) throw DomainError("slice degree must be non-negative");
  const int m = gens.front().conductor();
  const auto columns = sorted_descending(reduced_monomials(ctx, k), ord);
  SparseEchelon ech = span_echelon(gens, k, columns, &ctx);
  ech.reduce_fully();
  DegreeSlice slice;
  slice.k = k;
  for (const auto& mono : monomials_of_degree(ctx.nvars, k))
    if (!ctx.reduced(mono)) slice.basis.push_back(Polynomial::term(mono, CyclotomicNumber(m, 1)));
  for (const auto& row : ech.rows()) slice.basis.push_back(combine(row, columns, ctx.nvars, m));
  std::sort(slice.basis.begin(), slice.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(leading_term(a, ord).monomial, leading_term(b, ord).monomial);
  });
  return slice;
}

long jacobian_quotient_dimension(const std::vector<Polynomial>& gens, int k, const FermatContext& ctx) {
  check_gens(gens);
  if (k < 0) return 0;
  const auto columns = reduced_monomials(ctx, k);
  return static_cast<long>(columns.size()) - span_echelon(gens, k, columns, &ctx).rank();
}

SquareMembership ideal_square_membership(const Polynomial& target, const std::vector<Polynomial>& gens) {
  check_gens(gens);
  if (!target.is_homogeneous()) throw DomainError("target must be homogeneous");
  SquareMembership out;
  if (target.is_zero()) {
    out.member = true;
    return out;
  }
  const int D = target.degree();
  const int nvars = target.nvars();
  const int m = target.conductor();
  struct Unknown {
    int a, b;
    Monomial mu;
  };
  std::vector<Unknown> unknowns;
  std::vector<Polynomial> columns;
  for (int a = 0; a < static_cast<int>(gens.size()); ++a) {
    for (int b = a; b < static_cast<int>(gens.size()); ++b) {
      int e = gens[a].degree() + gens[b].degree();
      if (e > D) continue;
      Polynomial prod = gens[a] * gens[b];
      for (const auto& mu : monomials_of_degree(nvars, D - e)) {
        unknowns.push_back({a, b, mu});
        columns.push_back(prod.times_monomial(mu, CyclotomicNumber(m, 1)));
      }
    }
  }
  const int rhs = static_cast<int>(unknowns.size());
  std::map<Monomial, SparseRow> equations;
  for (int j = 0; j < rhs; ++j)
    for (const auto& [mono, c] : columns[j].terms()) equations[mono].emplace_back(j, c);
  for (const auto& [mono, c] : target.terms()) equations[mono].emplace_back(rhs, -c);
  SparseEchelon ech(rhs + 1, m);
  for (auto& [mono, row] : equations) ech.insert(std::move(row));
  if (ech.is_pivot(rhs)) return out;
  ech.reduce_fully();
  out.member = true;
  for (const auto& row : ech.rows()) {
    const auto& last = row.back();
    if (last.first != rhs) continue;
    const auto& u = unknowns[row.front().first];
    out.witness.push_back({u.a, u.b, u.mu, -last.second});
  }
  return out;
}

std::vector<Polynomial> inverse_system(const std::vector<Polynomial>& gens, const FermatContext& ctx) {
  check_gens(gens);
  const int m = gens.front().conductor();
  auto unknowns = reduced_monomials(ctx, ctx.sigma);
  std::reverse(unknowns.begin(), unknowns.end());  // ascending default lex
  const auto index = index_of(unknowns);
  SparseEchelon ech(static_cast<int>(unknowns.size()), m);
  for (const auto& g : gens) {
    for (const auto& gamma : reduced_monomials(ctx, ctx.sigma + g.degree())) {
      if (ech.full()) break;
      SparseRow row;
      for (const auto& [t, c] : g.terms())
        if (t.divides(gamma)) row.emplace_back(index.at(gamma / t), c);
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.insert(std::move(row));
    }
  }
  std::vector<Polynomial> out;
  for (const auto& v : ech.kernel()) out.push_back(combine(v, unknowns, ctx.nvars, m));
  return out;
}

}  // namespace fhl
