#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fhl/hodge/pairing.hpp"
#include "fhl/idealcalc/ideal.hpp"

namespace fhl {

// Reads the product structure of P off the degree-1 colon slice. Pairs are
// (leading variable, partner); a slot with a = 0 takes the lowest unused
// variable as partner. Throws Error when dim J_1 ≠ n/2+1 ("no product
// structure") or when a reduced form is not a binomial x_p − a x_q or the
// rebuilt class differs from P ("violates the product shape").
ProductClassSpec recover_structure(const Polynomial& p, const FermatContext& ctx);

struct Prop11Report {
  int d = 0;
  CyclotomicNumber a;
  bool direct = false;  // a^d + 1 = 0
  bool scan = true;     // every well-defined ratio is rational
  long pairs_checked = 0;
  long pairs_skipped = 0;
  std::optional<std::pair<int, int>> witness;  // (r, s) of the first irrational ratio
  CyclotomicNumber cross_ratio;                // −1 − (ζ_d + ζ_d^{-1})
  std::optional<CyclotomicNumber> cross_ratio_from_points;  // φ(ζ, ζ^3, ζ^5, ζ^7)^{-1}, ζ = ζ_{2d}, d >= 4
  bool cross_ratio_rational = false;
  bool implication_holds = true;  // scan ⇒ direct whenever the cross ratio is irrational
};

// Ratio (a^{d−1}+x)(ay−1) / ((a^{d−1}+y)(ax−1)), empty when undefined.
std::optional<CyclotomicNumber> prop11_ratio(const CyclotomicNumber& a, const CyclotomicNumber& x,
                                             const CyclotomicNumber& y, int d);

// Works in Q(ζ_M), M = lcm(conductor of a, 2d). Throws DomainError if d < 3.
Prop11Report prop11_scan(const CyclotomicNumber& a, int d);

struct PlaneReport {
  bool contained = false;
  std::vector<Polynomial> forms;       // the input forms in reduced echelon form
  Polynomial restriction;              // F on the plane (remainder of F by the forms)
  std::vector<Polynomial> cofactors;   // F = Σ forms[i] · cofactors[i] when contained
  std::vector<Polynomial> ideal;       // forms and cofactors interleaved
  std::vector<long> quotient_dims;     // full ring, degrees 0..σ+1
  int socle = -1;
};

// Throws DomainError if the forms are not n/2+1 independent linear forms.
PlaneReport plane_in_fermat(const std::vector<Polynomial>& forms, const FermatContext& ctx);

struct CiReport {
  std::vector<Polynomial> generators;  // f_1, g_1, f_2, g_2, ...
  bool jacobian_contained = false;
  std::vector<long> quotient_dims;     // degrees 0..σ+1
  int socle = -1;
  int expected_socle = 0;
  SquareMembership square;
  std::optional<Polynomial> class_poly;  // inverse-system generator when unique
};

// Throws DomainError on a degree mismatch and Error("not a decomposition of
// F") unless F = Σ f_i g_i.
CiReport dan_ci_ideal(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g, const FermatContext& ctx);

// The conic example: f_1 = x_0 − ζ x_1, f_2 = (x_2 − ζ^{r_1} x_3)(x_2 − ζ^{r_2} x_3)
// with ζ = ζ_{2d}, odd r's, and complementary cofactors. Needs n = 2.
std::pair<std::vector<Polynomial>, std::vector<Polynomial>> conic_decomposition(const FermatContext& ctx, int alpha,
                                                                                int r1, int r2);

// Decomposition of type (1, ..., 1, 2): binomial linear factors on the
// first n/2 pairs and a quadratic factor on the last pair.
std::pair<std::vector<Polynomial>, std::vector<Polynomial>> mixed_decomposition(const FermatContext& ctx,
                                                                                const std::vector<int>& alpha,
                                                                                int r1, int r2);

struct SpecialFamilyReport {
  ProductClassSpec spec;
  Polynomial poly;
  std::vector<int> alpha_tilde;
  CyclotomicNumber c_alpha_tilde;
  Certificate certificate;
  int j1_dim = 0;
};

// Prefactor u_d with G_d = u_d · S¹: 1 (d=3), ζ_8 (d=4), i (d=6), in Q(ζ_{2d}).
CyclotomicNumber family_prefactor(int d);
// Throws DomainError for d ∉ {3,4,6}.
bool in_family_group(const CyclotomicNumber& a, int d);

SpecialFamilyReport special_family(const std::vector<CyclotomicNumber>& a, const FermatContext& ctx, int jobs = 1);

}  // namespace fhl
