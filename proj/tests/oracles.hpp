#pragma once

// Reference computations that avoid the engine's series arithmetic.

#include <functional>
#include <map>
#include <vector>

#include "loopalg/poly.hpp"
#include "loopalg/rational.hpp"
#include "loopalg/series.hpp"

namespace loopalg::testing {

// Coefficients of f(x(z)) for x^i(z) = sum_{j=-n}^{top} x^i_j z^j, by
// enumerating, for every monomial of f, all tuples of Laurent indices.
// Only exponents below `below` are kept; top must be large enough that
// every kept coefficient is complete.
inline std::map<Exponent, Poly> expand_by_enumeration(const Poly& f, std::int64_t n, std::int64_t top,
                                                      Exponent below) {
  std::map<Exponent, Poly> out;
  for (const auto& [mono, c] : f.terms()) {
    std::vector<int> slots;
    for (const auto& [v, e] : mono.entries())
      for (std::uint32_t k = 0; k < e; ++k) slots.push_back(v.coordinate);
    std::vector<std::int64_t> idx(slots.size(), -n);
    std::function<void(std::size_t, Exponent, Poly)> walk = [&](std::size_t pos, Exponent sum, Poly acc) {
      if (pos == slots.size()) {
        if (sum < below) out[sum] += acc;
        return;
      }
      for (std::int64_t j = -n; j <= top; ++j) walk(pos + 1, sum + j, acc * Poly(VarRef::x(slots[pos], j)));
    };
    walk(0, 0, Poly(c));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// P^j_n(m) straight from the product formula.
inline Rational projector_value(Exponent j, std::int64_t n, Exponent m) {
  Rational num = 1, den = 1;
  for (Exponent i = -n; i <= n; ++i) {
    if (i == j) continue;
    num *= Rational(m - i);
    den *= Rational(j - i);
  }
  return num / den;
}

// Exponent of |P^j_n(x(z)) - x_j z^j|_N for the universal series, found by
// scanning m upwards from -N for the first p(m) - [m == j] != 0.
inline Exponent plain_distance_exponent(Exponent j, std::int64_t n, std::int64_t level) {
  for (Exponent m = -level;; ++m) {
    const Rational factor = projector_value(j, n, m) - (m == j ? 1 : 0);
    if (factor != 0) return m;
  }
}

}  // namespace loopalg::testing
