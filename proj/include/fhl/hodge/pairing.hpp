#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fhl/hodge/classes.hpp"

namespace fhl {

// Coefficient of (x_0 ... x_{n+1})^{d-2} in det Hess(F): (d(d-1))^{n+2}.
Rational hessian_coefficient_rational(const FermatContext& ctx);
CyclotomicNumber hessian_coefficient(const FermatContext& ctx);

struct PairingResult {
  CyclotomicNumber c;
  CyclotomicNumber intersection;  // −c·(d−1)^{n+2}·d / ((n/2)!)²
  std::optional<Rational> c_rational;
  std::optional<Rational> intersection_rational;
  Polynomial residual;  // non-socle terms of the reduced product (expected empty)
};

// Throws DomainError unless both inputs are homogeneous of degree σ.
PairingResult pair_classes(const Polynomial& p, const Polynomial& q, const FermatContext& ctx);

// Socle coefficient of reduce_mod_jacobian(p·q) without forming the product.
CyclotomicNumber socle_coefficient(const Polynomial& p, const Polynomial& q, const FermatContext& ctx);

enum class PairingFlag { Zero, Rational, Irrational };
std::string to_string(PairingFlag f);

struct CertificateEntry {
  LinearCycleSpec spec;
  CyclotomicNumber c;
  PairingFlag flag = PairingFlag::Zero;
};

struct Certificate {
  std::vector<CertificateEntry> entries;
  bool all_rational = true;
  std::optional<LinearCycleSpec> counterexample;  // first irrational entry
};

// Pairs p with every linear cycle over the default pairing, or over every
// perfect matching when all_pairings is set. OpenMP over alpha tuples;
// entries come back in (pairing, alpha) order regardless of jobs.
Certificate rationality_certificate(const Polynomial& p, const FermatContext& ctx, bool all_pairings = false,
                                    int jobs = 1);
Certificate rationality_certificate_serial(const Polynomial& p, const FermatContext& ctx, bool all_pairings = false);

}  // namespace fhl
