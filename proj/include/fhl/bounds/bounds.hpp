#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fhl/idealcalc/colon.hpp"

namespace fhl {

// #{β : 0 <= β <= α componentwise, Σβ = k}.
long count_divisors(const std::vector<int>& alpha, int k);

// C(n/2+d, d) − (n/2+1)².
long cota_bound(int n, int d);
// C(n/2+d, d) + C(n/2+d−1, d−1) − (3n²/8 + 9n/4 + 2).
long thm2_bound(int n, int d);

// All α ∈ [0, d−2]^{n+2} with Σα = σ, colexicographic (last entry slowest).
std::vector<std::vector<int>> alpha_vectors(int n, int d);

struct ProphosReport {
  int n = 0;
  int d = 0;
  int sigma = 0;
  long enumerated = 0;
  bool partial = false;
  long min = 0;
  long min_attainers_count = 0;
  long second_min = 0;  // minimum over α that are not relabelings of (0,...,0,d−2,...,d−2)
  long second_attainers_count = 0;
  long cota = 0;
  long thm2 = 0;
  // (i) min = cota, (ii) min attained exactly on relabelings of
  // (0,...,0,d−2,...,d−2), (iii) second_min = thm2 attained exactly on
  // relabelings of (0,...,0,1,d−3,d−2,...,d−2) (d >= 4, true when skipped),
  // (iv) exchange inequality for every admissible (α, i, j, k).
  std::vector<bool> assertions;
  std::vector<std::string> notes;
  long exchange_checks = 0;
  bool case22_inequality = false;  // n²/4 + 5n/2 + 2 <= 3n²/8 + 9n/4 + 2

  bool all_pass() const;
};

ProphosReport scan_prophos(int n, int d, int jobs = 1, long budget = 20000000);
ProphosReport scan_prophos_serial(int n, int d, long budget = 20000000);

enum class BoundClass { AttainsLinearMinimum, AttainsSecondMinimum, Above };
std::string to_string(BoundClass c);

struct BoundReport {
  long value = 0;
  long bound_linear = 0;
  long bound_second = 0;
  BoundClass classification = BoundClass::Above;
  bool j1_checked = false;
  int j1_dim = 0;
  bool j1_ok = true;
  std::vector<Polynomial> linear_forms;
};

BoundReport tangent_codim(const Polynomial& p, const FermatContext& ctx, int jobs = 1);

struct ShapeMatch {
  std::string shape;            // "linear", "thm2-case1", "thm2-case2.1" or "no match"
  std::vector<int> relabeling;  // template variable t ↦ observed variable relabeling[t]
  std::vector<Monomial> observed;
};

// Minimal generators of degree <= d of the template ideals, J^F included.
std::vector<Monomial> lt_template(const std::string& shape, const FermatContext& ctx);

ShapeMatch classify_lt_shape(const Polynomial& p, const MonomialOrder& ord, const FermatContext& ctx, int jobs = 1);

}  // namespace fhl
