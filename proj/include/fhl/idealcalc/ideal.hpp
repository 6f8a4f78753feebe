#pragma once

#include <vector>

#include "fhl/idealcalc/colon.hpp"

namespace fhl {

// Degree-k piece of ⟨gens⟩ in the full polynomial ring, reduced echelon
// basis with respect to `ord`.
DegreeSlice ideal_slice(const std::vector<Polynomial>& gens, int k, const MonomialOrder& ord);

// Whether the homogeneous polynomial q lies in ⟨gens⟩ (degree-wise span test).
bool in_ideal(const Polynomial& q, const std::vector<Polynomial>& gens);

// Degree-k piece of ⟨gens⟩ + J^F, in the same normal form colon_slice uses,
// so equal ideals give identical slices.
DegreeSlice ideal_slice_mod_jacobian(const std::vector<Polynomial>& gens, int k, const FermatContext& ctx,
                                     const MonomialOrder& ord);

// dim of the degree-k piece of R^F / ⟨gens⟩.
long jacobian_quotient_dimension(const std::vector<Polynomial>& gens, int k, const FermatContext& ctx);

struct SquareWitnessTerm {
  int a = 0;
  int b = 0;
  Monomial multiplier;
  CyclotomicNumber coefficient;
};

// target = Σ coefficient · multiplier · gens[a] · gens[b] when member.
struct SquareMembership {
  bool member = false;
  std::vector<SquareWitnessTerm> witness;
};

SquareMembership ideal_square_membership(const Polynomial& target, const std::vector<Polynomial>& gens);

// Basis of degree-σ polynomials P (in reduced monomials) with g·P ∈ J^F for
// every generator g. For a Gorenstein ideal containing J^F this has exactly
// one element, the class polynomial, normalized to leading coefficient 1.
std::vector<Polynomial> inverse_system(const std::vector<Polynomial>& gens, const FermatContext& ctx);

}  // namespace fhl
