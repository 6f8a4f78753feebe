// Serial reference vs OpenMP kernels.
//   bench_kernels [--jobs N] [--reps R]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "fhl/bounds/bounds.hpp"
#include "fhl/hodge/classes.hpp"
#include "fhl/hodge/pairing.hpp"
#include "fhl/idealcalc/colon.hpp"

using namespace fhl;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-44s %10.2f %10.2f %8.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "match" : "MISMATCH");
}

bool same_matrix(const MultiplicationMatrix& a, const MultiplicationMatrix& b) {
  return a.sources == b.sources && a.targets == b.targets && a.columns == b.columns;
}

bool same_certificate(const Certificate& a, const Certificate& b) {
  if (a.all_rational != b.all_rational || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (!(a.entries[i].spec == b.entries[i].spec) || !(a.entries[i].c == b.entries[i].c))
      return false;
  }
  return true;
}

bool same_scan(const ProphosReport& a, const ProphosReport& b) {
  return a.min == b.min && a.min_attainers_count == b.min_attainers_count && a.second_min == b.second_min &&
         a.second_attainers_count == b.second_attainers_count && a.assertions == b.assertions &&
         a.enumerated == b.enumerated && a.exchange_checks == b.exchange_checks;
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = omp_get_max_threads();
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      jobs = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) {
      reps = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: bench_kernels [--jobs N] [--reps R]\n");
      return 2;
    }
  }
  if (jobs < 1 || reps < 1) {
    std::fprintf(stderr, "jobs and reps must be positive\n");
    return 2;
  }
  std::printf("jobs=%d reps=%d (best of reps, milliseconds)\n", jobs, reps);
  std::printf("%-44s %10s %10s %9s\n", "kernel", "serial", "parallel", "speedup");
  bool ok = true;

  for (auto [n, d] : {std::pair{2, 7}, {4, 5}}) {
    FermatContext ctx(n, d);
    std::vector<int> alpha(n / 2 + 1);
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = static_cast<int>(2 * i + 1);
    Polynomial p = linear_cycle_poly(LinearCycleSpec{alpha, default_pairing(ctx)}, ctx);
    auto ord = MonomialOrder::lex(ctx.nvars);
    MultiplicationMatrix s, q;
    double ts = best_of(reps, [&] { s = multiplication_matrix_serial(p, d, ctx, ord); });
    double tp = best_of(reps, [&] { q = multiplication_matrix(p, d, ctx, ord, jobs); });
    std::string name = "multiplication_matrix (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ", k=d)";
    bool same = same_matrix(s, q);
    report(name.c_str(), ts, tp, same);
    ok = ok && same;
  }

  for (auto [n, d] : {std::pair{2, 7}, {4, 4}}) {
    FermatContext ctx(n, d);
    std::vector<int> alpha(n / 2 + 1, 1);
    Polynomial p = linear_cycle_poly(LinearCycleSpec{alpha, default_pairing(ctx)}, ctx);
    Certificate s, q;
    double ts = best_of(reps, [&] { s = rationality_certificate_serial(p, ctx, true); });
    double tp = best_of(reps, [&] { q = rationality_certificate(p, ctx, true, jobs); });
    std::string name = "rationality_certificate all (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
    bool same = same_certificate(s, q);
    report(name.c_str(), ts, tp, same);
    ok = ok && same;
  }

  for (auto [n, d] : {std::pair{2, 9}, {4, 6}, {6, 4}}) {
    ProphosReport s, q;
    double ts = best_of(reps, [&] { s = scan_prophos_serial(n, d); });
    double tp = best_of(reps, [&] { q = scan_prophos(n, d, jobs); });
    std::string name = "scan_prophos (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
    bool same = same_scan(s, q);
    report(name.c_str(), ts, tp, same);
    ok = ok && same;
  }
  return ok ? 0 : 1;
}
