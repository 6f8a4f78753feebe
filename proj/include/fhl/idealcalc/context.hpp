#pragma once

#include <vector>

#include "fhl/multipoly/polynomial.hpp"

namespace fhl {

// Fermat hypersurface x_0^d + ... + x_{n+1}^d with its Jacobian ring data.
struct FermatContext {
  int n = 2;
  int d = 3;
  int sigma = 1;
  int m = 6;
  int nvars = 4;

  // Throws DomainError unless n is even and >= 2 and d >= 3.
  FermatContext(int n, int d);

  // The socle monomial (x_0 ... x_{n+1})^{d-2}.
  Monomial socle() const;
  bool reduced(const Monomial& mono) const { return mono.max_exponent() <= d - 2; }

  friend bool operator==(const FermatContext&, const FermatContext&) = default;
};

// C(n, k) as a machine integer; throws DomainError on overflow.
long binomial(long n, long k);

// C(n+1+k, k): dimension of the degree-k polynomial space.
long full_dimension(const FermatContext& ctx, int k);

Polynomial fermat_polynomial(const FermatContext& ctx);

// Normal form in R^F: drops every monomial with an exponent >= d-1.
Polynomial reduce_mod_jacobian(const Polynomial& p, const FermatContext& ctx);

// Degree-k monomials with all exponents <= d-2, descending default lex.
std::vector<Monomial> reduced_monomials(const FermatContext& ctx, int k);

}  // namespace fhl
