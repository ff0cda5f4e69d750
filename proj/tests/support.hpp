#pragma once

#include <initializer_list>
#include <utility>

#include "loopalg/loopspace.hpp"
#include "loopalg/poly.hpp"
#include "loopalg/series.hpp"

namespace loopalg::testing {

inline Poly x(int i, std::int64_t j) { return Poly(VarRef::x(i, j)); }
inline Poly y(std::int64_t j) { return Poly(VarRef::y(j)); }
inline Poly amb(int i) { return Poly(VarRef::ambient(i)); }
inline Poly P(const char* text) { return parse_indexed_poly(text); }

inline PolySeries series(std::initializer_list<std::pair<Exponent, Poly>> terms, Exponent floor, Exponent cap) {
  PolySeries::Coefficients c;
  for (const auto& [m, p] : terms) c.emplace(m, p);
  return PolySeries(std::move(c), floor, cap);
}

inline PolySeries series(std::initializer_list<std::pair<Exponent, Poly>> terms, Exponent cap) {
  Exponent floor = kExact;
  for (const auto& [m, p] : terms)
    if (!p.is_zero()) floor = std::min(floor, m);
  return series(terms, std::min(floor, cap), cap);
}

}  // namespace loopalg::testing
