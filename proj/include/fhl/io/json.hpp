#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fhl/bounds/bounds.hpp"
#include "fhl/exactnum/cyclotomic.hpp"
#include "fhl/exactnum/rational.hpp"
#include "fhl/hodge/classes.hpp"
#include "fhl/hodge/pairing.hpp"
#include "fhl/hodge/structure.hpp"
#include "fhl/idealcalc/colon.hpp"
#include "fhl/idealcalc/groebner.hpp"
#include "fhl/idealcalc/ideal.hpp"
#include "fhl/multipoly/polynomial.hpp"

namespace fhl::io {

using Json = nlohmann::ordered_json;

// Exact values are always strings ("p" or "p/q"), never floats.
Json to_json(const Rational& r);
Json to_json(const CyclotomicNumber& z);      // {"m", "coords"}
Json to_json(const Monomial& mono);           // exponent array
Json to_json(const Polynomial& p);            // {"vars", "m", "terms": [{"exp", "coeff"}]}
Json to_json(const DegreeSlice& s);
Json to_json(const HilbertProfile& h);
Json to_json(const LinearCycleSpec& s);
Json to_json(const ProductClassSpec& s);
Json to_json(const PairingResult& r);
Json to_json(const Certificate& c);
Json to_json(const Prop11Report& r);
Json to_json(const PlaneReport& r);
Json to_json(const CiReport& r);
Json to_json(const SpecialFamilyReport& r);
Json to_json(const GroebnerResult& r);
Json to_json(const ProphosReport& r);
Json to_json(const BoundReport& r);
Json to_json(const ShapeMatch& s);
Json to_json(const SquareMembership& s);

// Decoders. `where` is a JSON pointer used in ParseError locations.
Rational rational_from_json(const Json& j, const std::string& where = "");
CyclotomicNumber cyclotomic_from_json(const Json& j, const std::string& where = "");
Polynomial polynomial_from_json(const Json& j, const std::string& where = "");
LinearCycleSpec linear_cycle_from_json(const Json& j, const std::string& where = "");
ProductClassSpec product_class_from_json(const Json& j, const std::string& where = "");

// Parses text, reporting the byte offset of a syntax error.
Json parse_json(std::string_view text);
// Canonical serialization: compact, keys in insertion order.
std::string dump(const Json& j);

}  // namespace fhl::io
