#pragma once

#include <optional>
#include <vector>

#include "fhl/idealcalc/context.hpp"

namespace fhl {

// (0, 1, 2, ..., n+1): pairs (x_0, x_1), (x_2, x_3), ...
std::vector<int> default_pairing(const FermatContext& ctx);
// Throws DomainError unless `pairing` is a permutation of 0..n+1.
void validate_pairing(const std::vector<int>& pairing, const FermatContext& ctx);

// The linear cycle {x_{p_0} − ζ_{2d}^{α_0} x_{q_0} = ... = 0}, where
// (p_j, q_j) = (pairing[2j], pairing[2j+1]).
struct LinearCycleSpec {
  std::vector<int> alpha;
  std::vector<int> pairing;

  friend bool operator==(const LinearCycleSpec&, const LinearCycleSpec&) = default;
};

void validate(const LinearCycleSpec& spec, const FermatContext& ctx);

// c_λ · ∏_j Σ_{p+q=d-2} x_{p_j}^p (a_j x_{q_j})^q.
struct ProductClassSpec {
  std::vector<CyclotomicNumber> a;
  CyclotomicNumber c_lambda;
  std::vector<int> pairing;

  int conductor() const { return c_lambda.conductor(); }
  friend bool operator==(const ProductClassSpec&, const ProductClassSpec&) = default;
};

void validate(const ProductClassSpec& spec, const FermatContext& ctx);

// Equivalent product spec: a_j = ζ_{2d}^{α_j}, c_λ = ζ_{2d}^{Σα}.
ProductClassSpec as_product_spec(const LinearCycleSpec& spec, const FermatContext& ctx);

Polynomial linear_cycle_poly(const LinearCycleSpec& spec, const FermatContext& ctx);
Polynomial product_class_poly(const ProductClassSpec& spec, const FermatContext& ctx);

// The binomial forms x_{p_j} − a_j x_{q_j} cutting out the linear space.
std::vector<Polynomial> linear_forms(const ProductClassSpec& spec, const FermatContext& ctx);

// All α ∈ {1, 3, ..., 2d−1}^{n/2+1}, lexicographic.
std::vector<std::vector<int>> all_alpha(const FermatContext& ctx);

// Every perfect matching of the n+2 coordinates as a pairing vector; pairs
// are (smaller, larger) and sorted by their first entry. The default pairing
// comes first.
std::vector<std::vector<int>> all_pairings(const FermatContext& ctx);

}  // namespace fhl
