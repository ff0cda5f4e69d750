#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopalg/loopspace.hpp"
#include "loopalg/seminorm.hpp"

namespace loopalg {

// num / a^pow in the algebraic localisation A[a^{-1}]^alg, where a = ev(f)
// is supplied by the caller to every operation.
struct LocalizedElem {
  PolySeries num;
  std::uint32_t pow = 0;

  static LocalizedElem of(PolySeries num, std::uint32_t pow = 0) { return {std::move(num), pow}; }

  // "num" when pow == 0, else "(num) / ev(f)^pow".
  std::string to_string() const;
};

// b / a as a series over Poly when every step of the coefficient solve is
// an exact polynomial division; nullopt otherwise. Requires a != 0.
std::optional<PolySeries> divide_series_exact(const PolySeries& b, const PolySeries& a);

// Cancels factors of a from the numerator while the division is exact and
// leaves a nonempty precision window.
LocalizedElem normalize(LocalizedElem u, const PolySeries& a);

LocalizedElem loc_add(const LocalizedElem& u, const LocalizedElem& v, const PolySeries& a);
LocalizedElem loc_sub(const LocalizedElem& u, const LocalizedElem& v, const PolySeries& a);
LocalizedElem loc_mul(const LocalizedElem& u, const LocalizedElem& v, const PolySeries& a);
LocalizedElem loc_scale(const LocalizedElem& u, const Rational& q);
// z^k u.
LocalizedElem loc_shift(const LocalizedElem& u, Exponent k);

// u == v by cross-multiplication, compared on the joint window.
bool loc_equal(const LocalizedElem& u, const LocalizedElem& v, const PolySeries& a);

// |num| * |a|^{-pow}. Throws good_element_violation if |a| is 0 or only
// an upper bound at this level.
SemiNormValue loc_seminorm(const LocalizedElem& u, const PolySeries& a, const SemiNormParams& p);

// Quotient rule: (∂b a - pow b ∂a) / a^{pow+1}.
LocalizedElem loc_derivative(const LocalizedElem& u, const PolySeries& a);

// Image in C_n((z)): a^{-1} goes to model.inverse. Requires u's
// denominator to be model.a.
ModelSeries loc_to_model(const LocalizedElem& u, const HypersurfaceModel& model);

// Distances |s_{i+1} - s_i| along a sequence of localised elements, the
// operational stand-in for Cauchy sequences of the completion.
std::vector<SemiNormValue> cauchy_distances(std::span<const LocalizedElem> sequence, const PolySeries& a,
                                            const SemiNormParams& p);

}  // namespace loopalg
