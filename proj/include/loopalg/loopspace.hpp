#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopalg/localized_coef.hpp"
#include "loopalg/poly.hpp"
#include "loopalg/series.hpp"

namespace loopalg {

using PolySeries = TruncSeries<Poly>;
using ModelSeries = TruncSeries<LocalizedCoef>;

// The universal Laurent series x^i(z) = sum_{j=-n}^{cap-1} x^i_j z^j for
// i = 1..d. Throws std::invalid_argument unless cap > -n.
std::vector<PolySeries> ev_series(int d, std::int64_t n, Exponent cap);

// y(z) = sum_{j=-n}^{cap-1} y_j z^j.
PolySeries inverse_coordinate_series(std::int64_t n, Exponent cap);

// Substitutes xs[i-1] for the ambient variable x^i of f.
template <CoefficientRing C>
TruncSeries<C> compose(const Poly& f, std::span<const TruncSeries<C>> xs) {
  std::map<std::pair<int, std::uint32_t>, TruncSeries<C>> powers;
  auto power_of = [&](int i, std::uint32_t e) -> const TruncSeries<C>& {
    auto it = powers.find({i, e});
    if (it != powers.end()) return it->second;
    const auto& x = xs[static_cast<std::size_t>(i - 1)];
    TruncSeries<C> p = x;
    for (std::uint32_t k = 1; k < e; ++k) p = p * x;
    return powers.emplace(std::pair{i, e}, std::move(p)).first->second;
  };
  TruncSeries<C> result;
  for (const auto& [m, c] : f.terms()) {
    TruncSeries<C> term = TruncSeries<C>::constant(C(c));
    for (const auto& [v, e] : m.entries()) {
      if (!v.is_ambient() || v.family != Family::Coordinate)
        throw std::invalid_argument("compose expects an ambient polynomial, found " + v.to_string());
      if (v.coordinate > static_cast<int>(xs.size()))
        throw dimension_error("variable " + v.to_string() + " exceeds the " + std::to_string(xs.size()) +
                              " substituted series");
      term = term * power_of(v.coordinate, e);
    }
    result = result + term;
  }
  return result;
}

// compose(f, ev_series(d, n, ·)) with the ev window sized so the result is
// known modulo z^cap (and truncated there).
PolySeries compose_ev(const Poly& f, int d, std::int64_t n, Exponent cap);

struct Relation {
  Exponent exponent;
  Poly generator;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// Nonzero z-coefficients, exponents below cap, of f_l(x(z)) for every f_l:
// generators of the ideal of L^nX. Ordered by f, then exponent.
std::vector<Relation> relations(std::span<const Poly> fs, int d, std::int64_t n, Exponent cap);

// Nonzero z-coefficients, exponents below cap, of y(z) f(x(z)) - 1:
// generators of the ideal defining B_n.
std::vector<Relation> complement_relations(const Poly& f, int d, std::int64_t n, Exponent cap);

struct FMin {
  Exponent m_low;
  Poly lead;
};

// Lowest z-exponent of f(x(z)) at level n and its coefficient.
// Throws zero_polynomial_error for f == 0.
FMin f_min(const Poly& f, int d, std::int64_t n);

// Inverse of π_n(s) in C_n((z)) with C_n = A_n[lead^{-1}], lead being the
// lowest surviving coefficient. Exact monomials invert exactly; any other
// exact series needs max_cap. Throws non_invertible_error when nothing
// survives π_n, precision_exhausted when no cap can be determined.
ModelSeries invert_series(const PolySeries& s, std::int64_t n, std::optional<Exponent> max_cap = std::nullopt);

// As above, but the leading coefficient must be a rational multiple of
// designated_unit, which becomes the denominator of every coefficient.
ModelSeries invert_series(const PolySeries& s, std::int64_t n, const Poly& designated_unit,
                          std::optional<Exponent> max_cap = std::nullopt);

// The map B_n -> C_n: y_j goes to the z^j coefficient of y, x-variables stay.
// Throws precision_exhausted if some y_j lies beyond y's cap.
LocalizedCoef substitute_inverse(const Poly& p, const ModelSeries& y);

// Everything attached to the hypersurface f at one level n: the element
// a = f(x(z)) of A_n((z)), its f_min, and its inverse in C_n((z)).
struct HypersurfaceModel {
  Poly f;
  int d = 1;
  std::int64_t level = 0;
  PolySeries a;
  FMin fmin;
  ModelSeries inverse;
};

// Sizes the ev window so that inverse is known modulo z^inverse_cap at least.
HypersurfaceModel build_hypersurface_model(const Poly& f, int d, std::int64_t n, Exponent inverse_cap);

}  // namespace loopalg
