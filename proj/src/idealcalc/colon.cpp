#include "fhl/idealcalc/colon.hpp"

#include <algorithm>
#include <map>

#include "fhl/error.hpp"

namespace fhl {

namespace {

Polynomial checked_class(const Polynomial& p, const FermatContext& ctx) {
  if (p.nvars() != ctx.nvars) throw DomainError("class polynomial has the wrong number of variables");
  if (p.is_zero() || !p.is_homogeneous() || p.degree() != ctx.sigma)
    throw DomainError("class polynomial must be homogeneous of degree " + std::to_string(ctx.sigma));
  Polynomial r = reduce_mod_jacobian(p, ctx);
  if (r.is_zero()) throw Error("class has zero primitive part");
  return r;
}

std::vector<Monomial> sorted_ascending(std::vector<Monomial> monos, const MonomialOrder& ord) {
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  return monos;
}

MultiplicationMatrix matrix_skeleton(const Polynomial& p, int k, const FermatContext& ctx, const MonomialOrder& ord) {
  MultiplicationMatrix mm;
  mm.k = k;
  mm.m = p.conductor();
  mm.sources = sorted_ascending(reduced_monomials(ctx, k), ord);
  mm.targets = reduced_monomials(ctx, ctx.sigma + k);
  mm.columns.resize(mm.sources.size());
  return mm;
}

SparseRow build_column(const Monomial& source, const Polynomial& p, const FermatContext& ctx,
                       const std::map<Monomial, int>& index) {
  SparseRow col;
  for (const auto& [t, c] : p.terms()) {
    Monomial g = source * t;
    if (!ctx.reduced(g)) continue;
    col.emplace_back(index.at(g), c);
  }
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return col;
}

std::map<Monomial, int> index_of(const std::vector<Monomial>& monos) {
  std::map<Monomial, int> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], static_cast<int>(i));
  return idx;
}

long matrix_rank(const MultiplicationMatrix& mm) {
  SparseEchelon ech(static_cast<int>(mm.sources.size()), mm.m);
  for (auto& row : mm.rows()) {
    if (ech.full()) break;
    ech.insert(std::move(row));
  }
  return ech.rank();
}

}  // namespace

bool HilbertProfile::gorenstein_symmetric() const {
  if (static_cast<int>(dims.size()) != sigma + 1) return false;
  if (dims.front() != 1 || dims.back() != 1) return false;
  for (int k = 0; k <= sigma; ++k)
    if (dims[k] != dims[sigma - k]) return false;
  return true;
}

std::vector<SparseRow> MultiplicationMatrix::rows() const {
  std::vector<SparseRow> out(targets.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [r, v] : columns[j]) out[r].emplace_back(static_cast<int>(j), v);
  std::erase_if(out, [](const SparseRow& r) { return r.empty(); });
  return out;
}

MultiplicationMatrix multiplication_matrix(const Polynomial& p, int k, const FermatContext& ctx,
                                           const MonomialOrder& ord, int jobs) {
  MultiplicationMatrix mm = matrix_skeleton(p, k, ctx, ord);
  const auto index = index_of(mm.targets);
  const Polynomial reduced = reduce_mod_jacobian(p, ctx);
  const long ncols = static_cast<long>(mm.sources.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(std::max(1, jobs))
  for (long j = 0; j < ncols; ++j) mm.columns[j] = build_column(mm.sources[j], reduced, ctx, index);
  return mm;
}

MultiplicationMatrix multiplication_matrix_serial(const Polynomial& p, int k, const FermatContext& ctx,
                                                  const MonomialOrder& ord) {
  MultiplicationMatrix mm = matrix_skeleton(p, k, ctx, ord);
  const auto index = index_of(mm.targets);
  const Polynomial reduced = reduce_mod_jacobian(p, ctx);
  for (std::size_t j = 0; j < mm.sources.size(); ++j) mm.columns[j] = build_column(mm.sources[j], reduced, ctx, index);
  return mm;
}

Polynomial combine(const SparseRow& v, const std::vector<Monomial>& basis, int nvars, int m) {
  Polynomial out(nvars, m);
  for (const auto& [j, c] : v) out.add_term(basis[j], c);
  return out;
}

DegreeSlice colon_slice(const Polynomial& p, int k, const FermatContext& ctx, const MonomialOrder& ord, int jobs) {
  if (ord.nvars() != ctx.nvars) throw DomainError("monomial order has the wrong number of variables");
  if (k < 0) throw DomainError("slice degree must be non-negative");
  const Polynomial reduced = checked_class(p, ctx);
  const int m = p.conductor();
  DegreeSlice slice;
  slice.k = k;
  slice.kind = SliceKind::Ideal;
  const CyclotomicNumber one(m, 1);
  if (k > ctx.sigma) {
    for (const auto& mono : monomials_of_degree(ctx.nvars, k)) slice.basis.push_back(Polynomial::term(mono, one));
  } else {
    for (const auto& mono : monomials_of_degree(ctx.nvars, k))
      if (!ctx.reduced(mono)) slice.basis.push_back(Polynomial::term(mono, one));
    MultiplicationMatrix mm = multiplication_matrix(reduced, k, ctx, ord, jobs);
    SparseEchelon ech(static_cast<int>(mm.sources.size()), m);
    for (auto& row : mm.rows()) {
      if (ech.full()) break;
      ech.insert(std::move(row));
    }
    for (const auto& v : ech.kernel()) slice.basis.push_back(combine(v, mm.sources, ctx.nvars, m));
  }
  std::sort(slice.basis.begin(), slice.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(leading_term(a, ord).monomial, leading_term(b, ord).monomial);
  });
  return slice;
}

DegreeSlice colon_slice(const Polynomial& p, int k, const FermatContext& ctx) {
  return colon_slice(p, k, ctx, MonomialOrder::lex(ctx.nvars));
}

long quotient_dimension(const Polynomial& p, int k, const FermatContext& ctx, int jobs) {
  if (k < 0) throw DomainError("slice degree must be non-negative");
  const Polynomial reduced = checked_class(p, ctx);
  if (k > ctx.sigma) return 0;
  return matrix_rank(multiplication_matrix(reduced, k, ctx, MonomialOrder::lex(ctx.nvars), jobs));
}

HilbertProfile hilbert_profile(const Polynomial& p, const FermatContext& ctx, int jobs) {
  checked_class(p, ctx);
  HilbertProfile h;
  h.sigma = ctx.sigma;
  for (int k = 0; k <= ctx.sigma; ++k) h.dims.push_back(quotient_dimension(p, k, ctx, jobs));
  return h;
}

std::set<Monomial> lt_slice(const DegreeSlice& slice, const MonomialOrder& ord) {
  std::set<Monomial> out;
  for (const auto& b : slice.basis) out.insert(leading_term(b, ord).monomial);
  return out;
}

DegreeSlice quotient_slice(const DegreeSlice& ideal_slice, const FermatContext& ctx, const MonomialOrder& ord) {
  const auto lts = lt_slice(ideal_slice, ord);
  const int m = ideal_slice.basis.empty() ? ctx.m : ideal_slice.basis.front().conductor();
  DegreeSlice q;
  q.k = ideal_slice.k;
  q.kind = SliceKind::Quotient;
  auto monos = monomials_of_degree(ctx.nvars, ideal_slice.k);
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  for (const auto& mono : monos)
    if (!lts.count(mono)) q.basis.push_back(Polynomial::term(mono, CyclotomicNumber(m, 1)));
  return q;
}

MonomialIdeal composed_lt_ideal(const Polynomial& p, const FermatContext& ctx, const MonomialOrder& ord, int maxdeg,
                                int jobs) {
  MonomialIdeal ideal(ctx.nvars);
  for (int k = 0; k <= maxdeg; ++k)
    for (const auto& mono : lt_slice(colon_slice(p, k, ctx, ord, jobs), ord)) ideal.add(mono);
  return ideal;
}

long pairing_rank(const Polynomial& p, int i, const FermatContext& ctx, const MonomialOrder& ord) {
  if (i < 0 || i > ctx.sigma) throw DomainError("pairing degree out of range");
  const Polynomial reduced = checked_class(p, ctx);
  auto left = quotient_slice(colon_slice(reduced, i, ctx, ord), ctx, ord);
  auto right = quotient_slice(colon_slice(reduced, ctx.sigma - i, ctx, ord), ctx, ord);
  const Monomial s = ctx.socle();
  SparseEchelon ech(right.dim(), p.conductor());
  for (const auto& u : left.basis) {
    const Monomial& um = u.terms().begin()->first;
    SparseRow row;
    for (int j = 0; j < right.dim(); ++j) {
      const Monomial& vm = right.basis[j].terms().begin()->first;
      Monomial uv = um * vm;
      if (!uv.divides(s)) continue;
      CyclotomicNumber c = reduced.coefficient(s / uv);
      if (!c.is_zero()) row.emplace_back(j, std::move(c));
    }
    ech.insert(std::move(row));
  }
  return ech.rank();
}

long pairing_rank(const Polynomial& p, int i, const FermatContext& ctx) {
  return pairing_rank(p, i, ctx, MonomialOrder::lex(ctx.nvars));
}

}  // namespace fhl
