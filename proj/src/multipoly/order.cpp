#include "fhl/multipoly/order.hpp"

#include <numeric>

#include "fhl/error.hpp"

namespace fhl {

MonomialOrder MonomialOrder::lex(int nvars) {
  std::vector<int> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(std::move(p));
}

MonomialOrder::MonomialOrder(std::vector<int> priority) : priority_(std::move(priority)) {
  std::vector<bool> seen(priority_.size(), false);
  for (int v : priority_) {
    if (v < 0 || v >= static_cast<int>(priority_.size()) || seen[v])
      throw DomainError("monomial order: priority is not a permutation");
    seen[v] = true;
  }
}

std::string MonomialOrder::str() const {
  std::string out;
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i) out += " > ";
    out += "x" + std::to_string(priority_[i]);
  }
  return out;
}

}  // namespace fhl
