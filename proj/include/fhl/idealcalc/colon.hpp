#pragma once

#include <set>
#include <vector>

#include "fhl/idealcalc/context.hpp"
#include "fhl/idealcalc/linalg.hpp"
#include "fhl/idealcalc/monomial_ideal.hpp"

namespace fhl {

enum class SliceKind { Ideal, Quotient };

// Degree-k piece of an ideal (basis in reduced echelon form, sorted by
// descending leading monomial) or of a quotient (basis of standard monomials).
struct DegreeSlice {
  int k = 0;
  SliceKind kind = SliceKind::Ideal;
  std::vector<Polynomial> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

struct HilbertProfile {
  int sigma = 0;
  std::vector<long> dims;

  bool gorenstein_symmetric() const;
  friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;
};

// Matrix of Q ↦ reduce_mod_jacobian(Q·P) from reduced degree-k monomials to
// reduced degree-(σ+k) monomials. Sources are sorted ascending in the order,
// so column 0 holds the smallest monomial.
struct MultiplicationMatrix {
  int k = 0;
  int m = 1;
  std::vector<Monomial> sources;
  std::vector<Monomial> targets;
  std::vector<SparseRow> columns;  // entries indexed by target position

  std::vector<SparseRow> rows() const;
};

// OpenMP build, one column per source monomial.
MultiplicationMatrix multiplication_matrix(const Polynomial& p, int k, const FermatContext& ctx,
                                           const MonomialOrder& ord, int jobs = 1);
// Single-threaded reference for the same matrix.
MultiplicationMatrix multiplication_matrix_serial(const Polynomial& p, int k, const FermatContext& ctx,
                                                  const MonomialOrder& ord);

// Degree-k piece of (J^F : P). Throws Error("class has zero primitive part")
// when P ∈ J^F and DomainError unless P is homogeneous of degree σ.
DegreeSlice colon_slice(const Polynomial& p, int k, const FermatContext& ctx, const MonomialOrder& ord,
                        int jobs = 1);
DegreeSlice colon_slice(const Polynomial& p, int k, const FermatContext& ctx);

// dim of the degree-k piece of the quotient by (J^F : P), by rank only.
long quotient_dimension(const Polynomial& p, int k, const FermatContext& ctx, int jobs = 1);

HilbertProfile hilbert_profile(const Polynomial& p, const FermatContext& ctx, int jobs = 1);

std::set<Monomial> lt_slice(const DegreeSlice& slice, const MonomialOrder& ord);

// Standard monomials complementing an ideal slice (kind Quotient).
DegreeSlice quotient_slice(const DegreeSlice& ideal_slice, const FermatContext& ctx, const MonomialOrder& ord);

// ⟨LT(J_0), ..., LT(J_maxdeg)⟩ assembled from colon slices.
MonomialIdeal composed_lt_ideal(const Polynomial& p, const FermatContext& ctx, const MonomialOrder& ord,
                                int maxdeg, int jobs = 1);

// Rank of R_i × R_{σ-i} → R_σ on the standard monomial bases of the quotient.
long pairing_rank(const Polynomial& p, int i, const FermatContext& ctx, const MonomialOrder& ord);
long pairing_rank(const Polynomial& p, int i, const FermatContext& ctx);

// Polynomial Σ v_j · basis[j] for a sparse coordinate vector.
Polynomial combine(const SparseRow& v, const std::vector<Monomial>& basis, int nvars, int m);

}  // namespace fhl
