#include "fhl/io/json.hpp"

#include "fhl/error.hpp"

namespace fhl::io {

namespace {

template <class T>
Json array_of(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json ints(const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(x);
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? to_json(*x) : Json(nullptr);
}

[[noreturn]] void fail(const std::string& what, const std::string& where) {
  throw ParseError(what, where.empty() ? "/" : where);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail("expected an object", where);
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"", where);
  return *it;
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail("expected an integer", where);
  return j.get<int>();
}

std::vector<int> ints_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail("expected an array of integers", where);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<Rational> coords_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail("expected an array of rational strings", where);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

Json coords_json(const CyclotomicNumber& z) {
  Json out = Json::array();
  for (const auto& c : z.coords()) out.push_back(c.str());
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const CyclotomicNumber& z) {
  Json out = Json::object();
  out["m"] = z.conductor();
  out["coords"] = coords_json(z);
  return out;
}

Json to_json(const Monomial& mono) { return ints(mono.exps()); }

Json to_json(const Polynomial& p) {
  Json out = Json::object();
  out["vars"] = p.nvars();
  out["m"] = p.conductor();
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json t = Json::object();
    t["exp"] = to_json(mono);
    t["coeff"] = coords_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const DegreeSlice& s) {
  Json out = Json::object();
  out["k"] = s.k;
  out["dim"] = s.dim();
  out["basis"] = array_of(s.basis);
  return out;
}

Json to_json(const HilbertProfile& h) {
  Json out = Json::object();
  out["sigma"] = h.sigma;
  out["dims"] = h.dims;
  return out;
}

Json to_json(const LinearCycleSpec& s) {
  Json out = Json::object();
  out["alpha"] = ints(s.alpha);
  out["pairing"] = ints(s.pairing);
  return out;
}

Json to_json(const ProductClassSpec& s) {
  Json out = Json::object();
  out["a"] = array_of(s.a);
  out["c_lambda"] = to_json(s.c_lambda);
  out["pairing"] = ints(s.pairing);
  return out;
}

Json to_json(const PairingResult& r) {
  Json out = Json::object();
  out["c"] = to_json(r.c);
  out["intersection"] = to_json(r.intersection);
  out["c_rational"] = optional_json(r.c_rational);
  out["intersection_rational"] = optional_json(r.intersection_rational);
  out["residual_terms"] = r.residual.size();
  return out;
}

Json to_json(const Certificate& c) {
  Json out = Json::object();
  out["all_rational"] = c.all_rational;
  out["counterexample"] = optional_json(c.counterexample);
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json row = Json::object();
    row["alpha"] = ints(e.spec.alpha);
    row["pairing"] = ints(e.spec.pairing);
    row["c"] = to_json(e.c);
    row["flag"] = to_string(e.flag);
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const Prop11Report& r) {
  Json out = Json::object();
  out["d"] = r.d;
  out["a"] = to_json(r.a);
  out["scan"] = r.scan;
  out["direct"] = r.direct;
  out["cross_ratio_rational"] = r.cross_ratio_rational;
  out["implication_holds"] = r.implication_holds;
  out["pairs_checked"] = r.pairs_checked;
  out["pairs_skipped"] = r.pairs_skipped;
  out["witness"] = r.witness ? Json::array({r.witness->first, r.witness->second}) : Json(nullptr);
  out["cross_ratio"] = to_json(r.cross_ratio);
  out["cross_ratio_from_points"] = optional_json(r.cross_ratio_from_points);
  return out;
}

Json to_json(const PlaneReport& r) {
  Json out = Json::object();
  out["contained"] = r.contained;
  out["forms"] = array_of(r.forms);
  out["restriction"] = to_json(r.restriction);
  out["cofactors"] = array_of(r.cofactors);
  out["quotient_dims"] = r.quotient_dims;
  out["socle"] = r.socle;
  return out;
}

Json to_json(const SquareMembership& s) {
  Json out = Json::object();
  out["member"] = s.member;
  Json w = Json::array();
  for (const auto& t : s.witness) {
    Json e = Json::object();
    e["a"] = t.a;
    e["b"] = t.b;
    e["multiplier"] = to_json(t.multiplier);
    e["coeff"] = coords_json(t.coefficient);
    w.push_back(std::move(e));
  }
  out["witness"] = std::move(w);
  return out;
}

Json to_json(const CiReport& r) {
  Json out = Json::object();
  out["generators"] = array_of(r.generators);
  out["jacobian_contained"] = r.jacobian_contained;
  out["quotient_dims"] = r.quotient_dims;
  out["socle"] = r.socle;
  out["expected_socle"] = r.expected_socle;
  out["f_in_square"] = to_json(r.square);
  out["class_poly"] = optional_json(r.class_poly);
  return out;
}

Json to_json(const SpecialFamilyReport& r) {
  Json out = Json::object();
  out["spec"] = to_json(r.spec);
  out["alpha_tilde"] = ints(r.alpha_tilde);
  out["c_alpha_tilde"] = to_json(r.c_alpha_tilde);
  out["j1_dim"] = r.j1_dim;
  out["certificate"] = to_json(r.certificate);
  out["poly"] = to_json(r.poly);
  return out;
}

Json to_json(const GroebnerResult& r) {
  Json out = Json::object();
  out["status"] = to_string(r.status);
  out["added"] = r.added;
  out["pairs_reduced"] = r.pairs_reduced;
  out["pairs_skipped"] = r.pairs_skipped;
  out["basis"] = array_of(r.basis);
  return out;
}

Json to_json(const ProphosReport& r) {
  Json out = Json::object();
  out["n"] = r.n;
  out["d"] = r.d;
  out["sigma"] = r.sigma;
  out["min"] = r.min;
  out["min_attainers_count"] = r.min_attainers_count;
  out["second_min"] = r.second_min;
  out["second_attainers_count"] = r.second_attainers_count;
  Json a = Json::array();
  for (bool b : r.assertions) a.push_back(b);
  out["assertions"] = std::move(a);
  out["cota"] = r.cota;
  out["thm2"] = r.thm2;
  out["enumerated"] = r.enumerated;
  out["partial"] = r.partial;
  out["exchange_checks"] = r.exchange_checks;
  out["case22_inequality"] = r.case22_inequality;
  out["notes"] = r.notes;
  return out;
}

Json to_json(const BoundReport& r) {
  Json out = Json::object();
  out["value"] = r.value;
  out["classification"] = to_string(r.classification);
  out["bound_linear"] = r.bound_linear;
  out["bound_second"] = r.bound_second;
  out["j1_checked"] = r.j1_checked;
  out["j1_dim"] = r.j1_dim;
  out["j1_ok"] = r.j1_ok;
  out["linear_forms"] = array_of(r.linear_forms);
  return out;
}

Json to_json(const ShapeMatch& s) {
  Json out = Json::object();
  out["shape"] = s.shape;
  out["relabeling"] = ints(s.relabeling);
  out["observed"] = array_of(s.observed);
  return out;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail("expected a rational string", where);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error&) {
    fail("malformed rational \"" + j.get<std::string>() + "\"", where);
  }
}

CyclotomicNumber cyclotomic_from_json(const Json& j, const std::string& where) {
  int m = int_from_json(field(j, "m", where), where + "/m");
  if (m < 1) fail("conductor must be positive", where + "/m");
  auto coords = coords_from_json(field(j, "coords", where), where + "/coords");
  if (static_cast<int>(coords.size()) != euler_phi(m))
    fail("expected " + std::to_string(euler_phi(m)) + " coords", where + "/coords");
  return CyclotomicNumber::from_coords(m, coords);
}

Polynomial polynomial_from_json(const Json& j, const std::string& where) {
  int nvars = int_from_json(field(j, "vars", where), where + "/vars");
  int m = int_from_json(field(j, "m", where), where + "/m");
  if (nvars < 0) fail("vars must be nonnegative", where + "/vars");
  if (m < 1) fail("conductor must be positive", where + "/m");
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array()) fail("expected an array", where + "/terms");
  Polynomial p(nvars, m);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string at = where + "/terms/" + std::to_string(i);
    auto exps = ints_from_json(field(terms[i], "exp", at), at + "/exp");
    if (static_cast<int>(exps.size()) != nvars) fail("exponent length differs from vars", at + "/exp");
    for (int e : exps) {
      if (e < 0) fail("negative exponent", at + "/exp");
    }
    auto coords = coords_from_json(field(terms[i], "coeff", at), at + "/coeff");
    if (static_cast<int>(coords.size()) != euler_phi(m))
      fail("expected " + std::to_string(euler_phi(m)) + " coords", at + "/coeff");
    Monomial mono(exps);
    if (!p.coefficient(mono).is_zero()) fail("duplicate monomial", at + "/exp");
    p.add_term(mono, CyclotomicNumber::from_coords(m, coords));
  }
  return p;
}

LinearCycleSpec linear_cycle_from_json(const Json& j, const std::string& where) {
  LinearCycleSpec s;
  s.alpha = ints_from_json(field(j, "alpha", where), where + "/alpha");
  s.pairing = ints_from_json(field(j, "pairing", where), where + "/pairing");
  return s;
}

ProductClassSpec product_class_from_json(const Json& j, const std::string& where) {
  ProductClassSpec s;
  const Json& a = field(j, "a", where);
  if (!a.is_array()) fail("expected an array", where + "/a");
  for (std::size_t i = 0; i < a.size(); ++i) s.a.push_back(cyclotomic_from_json(a[i], where + "/a/" + std::to_string(i)));
  s.c_lambda = cyclotomic_from_json(field(j, "c_lambda", where), where + "/c_lambda");
  s.pairing = ints_from_json(field(j, "pairing", where), where + "/pairing");
  return s;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string w = e.what();
    auto colon = w.find(": ");
    throw ParseError(colon == std::string::npos ? w : w.substr(colon + 2), "byte " + std::to_string(e.byte));
  }
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace fhl::io
