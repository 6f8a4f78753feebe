#include "fhl/cli/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fhl/bounds/bounds.hpp"
#include "fhl/error.hpp"
#include "fhl/hodge/classes.hpp"
#include "fhl/hodge/pairing.hpp"
#include "fhl/hodge/structure.hpp"
#include "fhl/idealcalc/colon.hpp"
#include "fhl/idealcalc/context.hpp"
#include "fhl/idealcalc/groebner.hpp"
#include "fhl/io/expr.hpp"
#include "fhl/io/json.hpp"
#include "format.hpp"

namespace fhl::cli {

namespace {

using io::Json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct ClassFlags {
  std::string alpha;
  std::string pairing;
  std::string a;
  std::string c_lambda;
  std::string poly;
  std::string expr;
  bool random = false;
};

struct Options {
  int n = 0;
  int d = 0;
  int m = 0;
  int jobs = 1;
  int degree = -1;
  int cap = -1;
  long budget = 20000000;
  std::uint64_t seed = 0;
  std::string output = "json";
  std::string order = "lex";
  std::string type;
  std::string roots;
  std::string forms;
  std::string f;
  std::string g;
  std::string gens;
  bool all_pairings = false;
  bool shape = false;
  bool pairing_ranks = false;
  ClassFlags cls;
  ClassFlags with;
};

FermatContext context(const Options& o) {
  try {
    return FermatContext(o.n, o.d);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

template <class F>
auto usage_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

MonomialOrder order_from(const std::string& text, int nvars) {
  if (text == "lex") return MonomialOrder::lex(nvars);
  if (text == "split") {
    std::vector<int> p;
    for (int i = 0; i < nvars; i += 2) p.push_back(i);
    for (int i = 1; i < nvars; i += 2) p.push_back(i);
    return MonomialOrder(p);
  }
  return usage_guard([&] {
    auto p = io::parse_int_list(text);
    if (static_cast<int>(p.size()) != nvars) throw UsageError("--order needs " + std::to_string(nvars) + " entries");
    return MonomialOrder(p);
  });
}

std::vector<int> pairing_from(const std::string& text, const FermatContext& ctx) {
  if (text.empty()) return default_pairing(ctx);
  return usage_guard([&] {
    auto p = io::parse_int_list(text);
    validate_pairing(p, ctx);
    return p;
  });
}

std::string read_payload(const std::string& value) {
  if (!value.empty() && value.front() == '{') return value;
  std::ifstream in(value, std::ios::binary);
  if (!in) throw UsageError("cannot read " + value);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Deterministic small rationals for --random; draws raw engine output so the
// stream is identical across standard libraries.
std::vector<CyclotomicNumber> random_coefficients(std::uint64_t seed, int count, int m) {
  std::mt19937_64 rng(seed);
  std::vector<CyclotomicNumber> out;
  while (static_cast<int>(out.size()) < count) {
    long p = static_cast<long>(rng() % 11) - 5;
    long q = static_cast<long>(rng() % 4) + 1;
    if (p == 0) continue;
    out.emplace_back(m, Rational(p) / Rational(q));
  }
  return out;
}

Polynomial build_class(const ClassFlags& c, const Options& o, const FermatContext& ctx, const std::string& prefix) {
  int sources = !c.alpha.empty() + !c.a.empty() + !c.poly.empty() + !c.expr.empty() + c.random;
  if (sources != 1)
    throw UsageError("give exactly one of --" + prefix + "alpha, --" + prefix + "a, --" + prefix + "poly, --" +
                     prefix + "expr" + (prefix.empty() ? ", --random" : ""));
  if (!c.alpha.empty()) {
    LinearCycleSpec spec;
    usage_guard([&] {
      spec.alpha = io::parse_int_list(c.alpha);
      spec.pairing = pairing_from(c.pairing, ctx);
      validate(spec, ctx);
      return 0;
    });
    return linear_cycle_poly(spec, ctx);
  }
  if (!c.a.empty() || c.random) {
    ProductClassSpec spec;
    usage_guard([&] {
      spec.a = c.random ? random_coefficients(o.seed, ctx.n / 2 + 1, ctx.m) : io::parse_cyclotomic_list(c.a, ctx.m);
      spec.c_lambda = c.c_lambda.empty() ? CyclotomicNumber(ctx.m, 1) : io::parse_cyclotomic(c.c_lambda, ctx.m);
      spec.pairing = pairing_from(c.pairing, ctx);
      validate(spec, ctx);
      return 0;
    });
    return product_class_poly(spec, ctx);
  }
  Polynomial p = usage_guard([&] {
    return c.expr.empty() ? io::polynomial_from_json(io::parse_json(read_payload(c.poly)))
                          : io::parse_polynomial(c.expr, ctx.nvars, ctx.m);
  });
  if (p.nvars() != ctx.nvars) throw UsageError("class has " + std::to_string(p.nvars()) + " variables, expected " +
                                               std::to_string(ctx.nvars));
  if (p.is_zero() || !p.is_homogeneous() || p.degree() != ctx.sigma)
    throw UsageError("class must be homogeneous of degree " + std::to_string(ctx.sigma));
  return p;
}

void add_class_flags(CLI::App* app, ClassFlags& c, const std::string& prefix, const std::string& what) {
  app->add_option("--" + prefix + "alpha", c.alpha, "linear cycle exponents, e.g. 1,3 (" + what + ")");
  app->add_option("--" + prefix + "pairing", c.pairing, "variable pairing permutation (" + what + ")");
  app->add_option("--" + prefix + "a", c.a, "product class coefficients, e.g. \"z, 2/3\" (" + what + ")");
  app->add_option("--" + prefix + "c-lambda", c.c_lambda, "product class scaling (" + what + ")");
  app->add_option("--" + prefix + "poly", c.poly, "polynomial JSON, inline or file path (" + what + ")");
  app->add_option("--" + prefix + "expr", c.expr, "polynomial expression in x0, x1, ... (" + what + ")");
}

void add_context(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "even dimension n")->required();
  app->add_option("--d", o.d, "degree d")->required();
}

std::vector<std::string> cell_row(std::initializer_list<std::string> cells) { return cells; }

// ---- verbs ----

Output do_hilbert(const Options& o) {
  auto ctx = context(o);
  auto ord = order_from(o.order, ctx.nvars);
  Polynomial p = build_class(o.cls, o, ctx, "");
  Output out;
  if (o.degree >= 0) {
    DegreeSlice s = colon_slice(p, o.degree, ctx, ord, o.jobs);
    out.json = io::to_json(s);
    Json lt = Json::array();
    for (const auto& mono : lt_slice(s, ord)) lt.push_back(io::to_json(mono));
    out.json["lt"] = std::move(lt);
    out.json["quotient_dim"] = full_dimension(ctx, o.degree) - s.dim();
    return out;
  }
  HilbertProfile h = hilbert_profile(p, ctx, o.jobs);
  out.json = io::to_json(h);
  bool socle_ok = static_cast<int>(h.dims.size()) > ctx.sigma && h.dims[ctx.sigma] == 1;
  bool symmetric = h.gorenstein_symmetric();
  out.json["socle_one"] = socle_ok;
  out.json["symmetric"] = symmetric;
  bool ranks_ok = true;
  if (o.pairing_ranks) {
    Json ranks = Json::array();
    for (int i = 0; i <= ctx.sigma; ++i) {
      long r = pairing_rank(p, i, ctx, ord);
      ranks_ok = ranks_ok && r == h.dims[i];
      ranks.push_back(r);
    }
    out.json["pairing_ranks"] = std::move(ranks);
    out.json["pairing_perfect"] = ranks_ok;
  }
  out.header = {"k", "dim"};
  for (std::size_t k = 0; k < h.dims.size(); ++k) out.rows.push_back(cell_row({std::to_string(k), std::to_string(h.dims[k])}));
  out.status = socle_ok && symmetric && ranks_ok ? kOk : kFailure;
  return out;
}

Output do_tangent(const Options& o) {
  auto ctx = context(o);
  auto ord = order_from(o.order, ctx.nvars);
  Polynomial p = build_class(o.cls, o, ctx, "");
  Output out;
  out.json = io::to_json(tangent_codim(p, ctx, o.jobs));
  if (o.shape) out.json["shape"] = io::to_json(classify_lt_shape(p, ord, ctx, o.jobs));
  return out;
}

Output do_linear_cycle(const Options& o) {
  auto ctx = context(o);
  if (o.cls.alpha.empty()) throw UsageError("--alpha is required");
  LinearCycleSpec spec;
  usage_guard([&] {
    spec.alpha = io::parse_int_list(o.cls.alpha);
    spec.pairing = pairing_from(o.cls.pairing, ctx);
    validate(spec, ctx);
    return 0;
  });
  auto product = as_product_spec(spec, ctx);
  Output out;
  out.json = Json::object();
  out.json["spec"] = io::to_json(spec);
  out.json["product"] = io::to_json(product);
  Json forms = Json::array();
  for (const auto& f : linear_forms(product, ctx)) forms.push_back(io::to_json(f));
  out.json["forms"] = std::move(forms);
  out.json["poly"] = io::to_json(linear_cycle_poly(spec, ctx));
  return out;
}

Output do_pair(const Options& o) {
  auto ctx = context(o);
  Polynomial p = build_class(o.cls, o, ctx, "");
  Polynomial q = build_class(o.with, o, ctx, "with-");
  Output out;
  out.json = io::to_json(pair_classes(p, q, ctx));
  return out;
}

Output do_certify(const Options& o) {
  auto ctx = context(o);
  Polynomial p = build_class(o.cls, o, ctx, "");
  Certificate cert = rationality_certificate(p, ctx, o.all_pairings, o.jobs);
  Output out;
  out.json = io::to_json(cert);
  out.summary = Json::object();
  out.summary["all_rational"] = cert.all_rational;
  out.summary["counterexample"] = cert.counterexample ? io::to_json(*cert.counterexample) : Json(nullptr);
  out.summary["entries"] = cert.entries.size();
  out.header = {"alpha", "pairing", "c", "flag"};
  for (const auto& e : cert.entries) {
    out.rows.push_back({readable(io::to_json(e.spec).at("alpha")), readable(io::to_json(e.spec).at("pairing")),
                        e.c.str(), to_string(e.flag)});
  }
  out.status = cert.all_rational ? kOk : kFailure;
  return out;
}

Output do_recover(const Options& o) {
  auto ctx = context(o);
  Polynomial p = build_class(o.cls, o, ctx, "");
  ProductClassSpec spec = recover_structure(p, ctx);
  Output out;
  out.json = io::to_json(spec);
  Json forms = Json::array();
  for (const auto& f : linear_forms(spec, ctx)) forms.push_back(io::to_json(f));
  out.json["forms"] = std::move(forms);
  return out;
}

Output do_prop11(const Options& o) {
  if (o.d < 3) throw UsageError("--d must be at least 3");
  int m = o.m > 0 ? o.m : 2 * o.d;
  if (o.cls.a.empty()) throw UsageError("--a is required");
  CyclotomicNumber a = usage_guard([&] { return io::parse_cyclotomic(o.cls.a, m); });
  Prop11Report r = prop11_scan(a, o.d);
  Output out;
  out.json = io::to_json(r);
  out.status = r.implication_holds ? kOk : kFailure;
  return out;
}

std::vector<Polynomial> plane_forms(const Options& o, const FermatContext& ctx) {
  int sources = !o.cls.a.empty() + !o.cls.alpha.empty() + !o.forms.empty();
  if (sources != 1) throw UsageError("give exactly one of --a, --alpha, --forms");
  if (!o.forms.empty()) {
    return usage_guard([&] {
      std::vector<Polynomial> out;
      for (const auto& s : io::split_list(o.forms)) out.push_back(io::parse_polynomial(s, ctx.nvars, ctx.m));
      return out;
    });
  }
  ProductClassSpec spec;
  usage_guard([&] {
    spec.pairing = pairing_from(o.cls.pairing, ctx);
    if (!o.cls.alpha.empty()) {
      LinearCycleSpec lc{io::parse_int_list(o.cls.alpha), spec.pairing};
      validate(lc, ctx);
      spec = as_product_spec(lc, ctx);
    } else {
      spec.a = io::parse_cyclotomic_list(o.cls.a, ctx.m);
      spec.c_lambda = CyclotomicNumber(ctx.m, 1);
      validate(spec, ctx);
    }
    return 0;
  });
  return linear_forms(spec, ctx);
}

Output do_plane(const Options& o) {
  auto ctx = context(o);
  auto forms = plane_forms(o, ctx);
  PlaneReport r = usage_guard([&] { return plane_in_fermat(forms, ctx); });
  Output out;
  out.json = io::to_json(r);
  return out;
}

Output do_dan_ci(const Options& o) {
  auto ctx = context(o);
  std::pair<std::vector<Polynomial>, std::vector<Polynomial>> fg;
  usage_guard([&] {
    if (!o.f.empty() || !o.g.empty()) {
      if (!o.type.empty()) throw UsageError("--type conflicts with --f/--g");
      for (const auto& s : io::split_list(o.f)) fg.first.push_back(io::parse_polynomial(s, ctx.nvars, ctx.m));
      for (const auto& s : io::split_list(o.g)) fg.second.push_back(io::parse_polynomial(s, ctx.nvars, ctx.m));
      return 0;
    }
    auto roots = io::parse_int_list(o.roots.empty() ? "1,3" : o.roots);
    if (roots.size() != 2) throw UsageError("--roots needs two entries");
    if (o.type == "conic") {
      auto alpha = o.cls.alpha.empty() ? std::vector<int>{1} : io::parse_int_list(o.cls.alpha);
      if (alpha.size() != 1) throw UsageError("--alpha needs one entry for a conic");
      fg = conic_decomposition(ctx, alpha[0], roots[0], roots[1]);
    } else if (o.type == "mixed") {
      auto alpha = o.cls.alpha.empty() ? std::vector<int>(ctx.n / 2, 1) : io::parse_int_list(o.cls.alpha);
      fg = mixed_decomposition(ctx, alpha, roots[0], roots[1]);
    } else {
      throw UsageError("--type must be conic or mixed (or give --f and --g)");
    }
    return 0;
  });
  CiReport r = dan_ci_ideal(fg.first, fg.second, ctx);
  Output out;
  out.json = io::to_json(r);
  bool ok = r.jacobian_contained && r.socle == r.expected_socle && r.square.member && r.class_poly.has_value();
  if (r.class_poly) {
    out.json["tangent"] = io::to_json(tangent_codim(*r.class_poly, ctx, o.jobs));
    if (o.shape) out.json["shape"] = io::to_json(classify_lt_shape(*r.class_poly, order_from(o.order, ctx.nvars), ctx, o.jobs));
  }
  out.status = ok ? kOk : kFailure;
  return out;
}

Output do_special(const Options& o) {
  auto ctx = context(o);
  if (o.cls.a.empty()) throw UsageError("--a is required");
  auto a = usage_guard([&] { return io::parse_cyclotomic_list(o.cls.a, ctx.m); });
  SpecialFamilyReport r = usage_guard([&] { return special_family(a, ctx, o.jobs); });
  Output out;
  out.json = io::to_json(r);
  out.status = r.certificate.all_rational ? kOk : kFailure;
  return out;
}

Output do_scan_bounds(const Options& o) {
  auto ctx = context(o);
  ProphosReport r = scan_prophos(ctx.n, ctx.d, o.jobs, o.budget);
  Output out;
  out.json = io::to_json(r);
  out.status = r.all_pass() ? kOk : kFailure;
  return out;
}

Output do_groebner(const Options& o) {
  std::vector<Polynomial> gens;
  int nvars = o.n + 2;
  int m = o.m > 0 ? o.m : (o.d > 0 ? 2 * o.d : 1);
  usage_guard([&] {
    if (o.n < 0) throw UsageError("--n must be nonnegative");
    if (o.gens.empty() == o.cls.a.empty()) throw UsageError("give exactly one of --gens, --a");
    if (!o.gens.empty()) {
      for (const auto& s : io::split_list(o.gens)) {
        Polynomial p = io::parse_polynomial(s, nvars, m);
        if (p.is_zero() || !p.is_homogeneous()) throw UsageError("generators must be nonzero and homogeneous");
        gens.push_back(p);
      }
      return 0;
    }
    auto ctx = context(o);
    auto a = io::parse_cyclotomic_list(o.cls.a, m);
    if (static_cast<int>(a.size()) != ctx.n / 2 + 1) throw UsageError("--a needs n/2+1 entries");
    for (std::size_t j = 0; j < a.size(); ++j) {
      int p = static_cast<int>(2 * j);
      gens.push_back(Polynomial::variable(nvars, m, p) - Polynomial::variable(nvars, m, p + 1).scaled(a[j]));
    }
    for (int q = 1; q < nvars; q += 2) gens.push_back(Polynomial::term(Monomial::variable(nvars, q, ctx.d - 1), CyclotomicNumber(m, 1)));
    return 0;
  });
  int maxdeg = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
  int cap = o.cap >= 0 ? o.cap : 2 * maxdeg;
  GroebnerResult r = buchberger(gens, order_from(o.order, nvars), cap);
  Output out;
  out.json = io::to_json(r);
  out.json["cap"] = cap;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hodge loci of Fermat hypersurfaces: exact computations", "hodgeloci"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::function<Output(const Options&)>> verbs;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 1024));
    sub->add_option("--seed", o.seed, "seed for --random");
  };
  auto verb = [&](const std::string& name, const std::string& help, std::function<Output(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    verbs[sub] = std::move(fn);
    return sub;
  };

  auto* hilbert = verb("hilbert", "Hilbert function of the quotient by the colon ideal", do_hilbert);
  add_context(hilbert, o);
  add_class_flags(hilbert, o.cls, "", "class");
  hilbert->add_flag("--random", o.cls.random, "random product class from --seed");
  hilbert->add_option("--degree", o.degree, "single degree slice instead of the profile")->check(CLI::NonNegativeNumber);
  hilbert->add_option("--order", o.order, "lex, split, or a variable priority list");
  hilbert->add_flag("--pairing-ranks", o.pairing_ranks, "also check the multiplication pairings");

  auto* tangent = verb("tangent", "tangent codimension and bound classification", do_tangent);
  add_context(tangent, o);
  add_class_flags(tangent, o.cls, "", "class");
  tangent->add_flag("--random", o.cls.random, "random product class from --seed");
  tangent->add_flag("--shape", o.shape, "match the leading-term ideal against the extremal shapes");
  tangent->add_option("--order", o.order, "lex, split, or a variable priority list");

  auto* lc = verb("linear-cycle", "polynomial of a linear cycle", do_linear_cycle);
  add_context(lc, o);
  lc->add_option("--alpha", o.cls.alpha, "odd exponents, e.g. 1,3")->required();
  lc->add_option("--pairing", o.cls.pairing, "variable pairing permutation");

  auto* pair = verb("pair", "intersection pairing of two classes", do_pair);
  add_context(pair, o);
  add_class_flags(pair, o.cls, "", "first class");
  add_class_flags(pair, o.with, "with-", "second class");

  auto* certify = verb("certify", "pair a class with every linear cycle", do_certify);
  add_context(certify, o);
  add_class_flags(certify, o.cls, "", "class");
  certify->add_flag("--random", o.cls.random, "random product class from --seed");
  certify->add_flag("--all-pairings", o.all_pairings, "use every variable pairing, not only the default");

  auto* recover = verb("recover", "recover the product structure of a class", do_recover);
  add_context(recover, o);
  add_class_flags(recover, o.cls, "", "class");
  recover->add_flag("--random", o.cls.random, "random product class from --seed");

  auto* prop11 = verb("prop11", "rationality scan for a coefficient", do_prop11);
  prop11->add_option("--d", o.d, "degree d")->required();
  prop11->add_option("--a", o.cls.a, "coefficient expression")->required();
  prop11->add_option("--m", o.m, "conductor of z in --a (default 2d)")->check(CLI::PositiveNumber);

  auto* plane = verb("plane", "is a linear space contained in the Fermat variety", do_plane);
  add_context(plane, o);
  plane->add_option("--a", o.cls.a, "coefficients of x_{2j} - a_j x_{2j+1}");
  plane->add_option("--alpha", o.cls.alpha, "a_j = z^alpha_j");
  plane->add_option("--pairing", o.cls.pairing, "variable pairing permutation");
  plane->add_option("--forms", o.forms, "explicit linear forms");

  auto* ci = verb("dan-ci", "complete-intersection ideal from a decomposition of F", do_dan_ci);
  add_context(ci, o);
  ci->add_option("--type", o.type, "conic or mixed");
  ci->add_option("--alpha", o.cls.alpha, "exponents of the linear factors");
  ci->add_option("--roots", o.roots, "odd exponents of the quadratic factor's roots (default 1,3)");
  ci->add_option("--f", o.f, "explicit factors f_i");
  ci->add_option("--g", o.g, "explicit cofactors g_i");
  ci->add_flag("--shape", o.shape, "match the leading-term ideal against the extremal shapes");
  ci->add_option("--order", o.order, "lex, split, or a variable priority list");

  auto* special = verb("special", "classes with rational pairings for d = 3, 4, 6", do_special);
  add_context(special, o);
  special->add_option("--a", o.cls.a, "coefficients in G_d")->required();

  auto* scan = verb("scan-bounds", "divisor-count minima and equality cases", do_scan_bounds);
  add_context(scan, o);
  scan->add_option("--budget", o.budget, "maximum number of exponent vectors")->check(CLI::PositiveNumber);

  auto* groebner = verb("groebner", "Buchberger completion", do_groebner);
  groebner->add_option("--n", o.n, "n (the ring has n+2 variables)")->required();
  groebner->add_option("--d", o.d, "degree d (for --a and the default conductor)");
  groebner->add_option("--m", o.m, "conductor of z (default 2d)")->check(CLI::PositiveNumber);
  groebner->add_option("--gens", o.gens, "generators, comma separated");
  groebner->add_option("--a", o.cls.a, "binomial system x_{2j} - a_j x_{2j+1}, x_odd^{d-1}");
  groebner->add_option("--order", o.order, "lex, split, or a variable priority list");
  groebner->add_option("--cap", o.cap, "largest S-pair degree to reduce (default twice the top generator degree)");

  std::vector<std::string> argv_store{"hodgeloci"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Format format = o.output == "csv" ? Format::Csv : (o.output == "table" ? Format::Table : Format::Json);
  for (auto& [sub, fn] : verbs) {
    if (!sub->parsed()) continue;
    try {
      Output result = fn(o);
      emit(result, format, out);
      return result.status;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsage;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kFailure;
    }
  }
  return kUsage;
}

}  // namespace fhl::cli
