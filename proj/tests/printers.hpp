#pragma once

#include <ostream>

#include "fhl/exactnum/cyclotomic.hpp"
#include "fhl/multipoly/polynomial.hpp"

namespace fhl {

inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.str(); }
inline void PrintTo(const CyclotomicNumber& z, std::ostream* os) { *os << "[m=" << z.conductor() << "] " << z.str(); }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << m.str(); }
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.str(); }

}  // namespace fhl
