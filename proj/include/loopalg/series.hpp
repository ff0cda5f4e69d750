#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "loopalg/errors.hpp"
#include "loopalg/rational.hpp"

namespace loopalg {

template <class C>
concept CoefficientRing = requires(const C a, const C b, const Rational q) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a * q } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  C(q);
};

using Exponent = std::int64_t;

// True if s has a space outside every pair of parentheses.
inline bool has_top_level_space(const std::string& s) {
  int depth = 0;
  for (const char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ' ' && depth == 0) return true;
  }
  return false;
}

// Stands for +infinity in floors and caps: a series whose cap is kExact is
// known exactly, and the exact zero has floor == cap == kExact.
inline constexpr Exponent kExact = std::numeric_limits<Exponent>::max() / 4;

// Saturating sum: anything involving kExact stays kExact.
constexpr Exponent exponent_add(Exponent a, Exponent b) {
  if (a >= kExact || b >= kExact) return kExact;
  return std::clamp<Exponent>(a + b, -kExact, kExact);
}

// Two-way Laurent series in z, known modulo z^cap. No nonzero coefficient
// lies below floor; floor is a bound and need not be attained.
template <CoefficientRing C>
class TruncSeries {
 public:
  using Coefficients = std::map<Exponent, C>;

  // The exact zero.
  TruncSeries() = default;

  TruncSeries(Coefficients coeffs, Exponent floor, Exponent cap) : floor_(floor), cap_(cap) {
    for (auto& [m, c] : coeffs) {
      if (c.is_zero()) continue;
      if (m < floor || m >= cap)
        throw std::invalid_argument("coefficient at z^" + std::to_string(m) + " outside window [" +
                                    std::to_string(floor) + ", " + std::to_string(cap) + ")");
      coeffs_.emplace(m, std::move(c));
    }
    if (floor_ > cap_) floor_ = cap_;
  }

  // Known exactly; floor is the lowest stored exponent.
  static TruncSeries exact(Coefficients coeffs) {
    Exponent floor = kExact;
    for (const auto& [m, c] : coeffs)
      if (!c.is_zero()) floor = std::min(floor, m);
    return TruncSeries(std::move(coeffs), floor, kExact);
  }

  static TruncSeries monomial(C c, Exponent m, Exponent cap = kExact) {
    if (c.is_zero()) return cap >= kExact ? TruncSeries() : unknown(cap);
    Coefficients coeffs;
    coeffs.emplace(m, std::move(c));
    return TruncSeries(std::move(coeffs), m, cap);
  }

  static TruncSeries constant(C c) { return monomial(std::move(c), 0); }

  // O(z^cap): nothing known below cap except that it is small.
  static TruncSeries unknown(Exponent cap) { return TruncSeries({}, cap, cap); }

  Exponent floor() const { return floor_; }
  Exponent cap() const { return cap_; }
  bool is_exact() const { return cap_ >= kExact; }
  bool has_empty_window() const { return floor_ >= cap_ && !is_exact(); }
  const Coefficients& coeffs() const { return coeffs_; }

  // Coefficient of z^m; throws precision_exhausted beyond the known window.
  C coeff(Exponent m) const {
    if (m >= cap_)
      throw precision_exhausted("coefficient of z^" + std::to_string(m) + " requested but series is only known modulo z^" +
                                std::to_string(cap_));
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? C(Rational(0)) : it->second;
  }

  // Raises floor to the lowest stored exponent.
  TruncSeries tightened() const {
    TruncSeries r = *this;
    r.floor_ = coeffs_.empty() ? cap_ : coeffs_.begin()->first;
    return r;
  }

  TruncSeries truncated(Exponent cap) const {
    if (cap >= cap_) return *this;
    Coefficients kept(coeffs_.begin(), coeffs_.lower_bound(cap));
    return TruncSeries(std::move(kept), std::min(floor_, cap), cap);
  }

  // Applies f to every stored coefficient; window unchanged.
  template <class F>
  auto map_coefficients(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    typename TruncSeries<D>::Coefficients out;
    for (const auto& [m, c] : coeffs_) out.emplace(m, f(c));
    return TruncSeries<D>(std::move(out), floor_, cap_);
  }

  // Applies f(m, c) to every stored coefficient; window unchanged.
  template <class F>
  TruncSeries map_indexed(F&& f) const {
    Coefficients out;
    for (const auto& [m, c] : coeffs_) out.emplace(m, f(m, c));
    return TruncSeries(std::move(out), floor_, cap_);
  }

  friend TruncSeries operator+(const TruncSeries& s, const TruncSeries& t) {
    const Exponent cap = std::min(s.cap_, t.cap_);
    Coefficients out(s.coeffs_.begin(), s.coeffs_.lower_bound(cap));
    for (auto it = t.coeffs_.begin(); it != t.coeffs_.lower_bound(cap); ++it) {
      auto [pos, inserted] = out.try_emplace(it->first, it->second);
      if (!inserted) pos->second = pos->second + it->second;
    }
    return TruncSeries(std::move(out), std::min(s.floor_, t.floor_), cap);
  }

  friend TruncSeries operator-(const TruncSeries& s) {
    return s.map_coefficients([](const C& c) -> C { return -c; });
  }

  friend TruncSeries operator-(const TruncSeries& s, const TruncSeries& t) { return s + (-t); }

  // Cauchy product; throws precision_exhausted when nothing would be known.
  friend TruncSeries operator*(const TruncSeries& s, const TruncSeries& t) {
    const Exponent floor = exponent_add(s.floor_, t.floor_);
    const Exponent cap = std::min(exponent_add(s.cap_, t.floor_), exponent_add(t.cap_, s.floor_));
    if (cap <= floor && cap < kExact)
      throw precision_exhausted("product has empty precision window [" + std::to_string(floor) + ", " +
                                std::to_string(cap) + ")");
    Coefficients out;
    for (const auto& [i, a] : s.coeffs_) {
      for (const auto& [j, b] : t.coeffs_) {
        if (i + j >= cap) break;
        C term = a * b;
        auto [pos, inserted] = out.try_emplace(i + j, term);
        if (!inserted) pos->second = pos->second + term;
      }
    }
    return TruncSeries(std::move(out), floor, cap);
  }

  friend TruncSeries operator*(const TruncSeries& s, const Rational& q) {
    if (q == 0) return s.is_exact() ? TruncSeries() : unknown(s.cap_);
    return s.map_coefficients([&q](const C& c) -> C { return c * q; });
  }

  // Multiplication by z^k.
  TruncSeries shifted(Exponent k) const {
    Coefficients out;
    for (const auto& [m, c] : coeffs_) out.emplace(m + k, c);
    return TruncSeries(std::move(out), exponent_add(floor_, k), exponent_add(cap_, k));
  }

  // Structural equality: same window, same coefficients.
  friend bool operator==(const TruncSeries& s, const TruncSeries& t) {
    return s.floor_ == t.floor_ && s.cap_ == t.cap_ && s.coeffs_ == t.coeffs_;
  }

  // "c*z^m + ... + O(z^cap)", increasing exponents.
  std::string to_string() const {
    std::string out;
    for (const auto& [m, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      std::string cs = c.to_string();
      if (has_top_level_space(cs)) cs = "(" + cs + ")";
      out += cs + "*z^" + std::to_string(m);
    }
    if (!is_exact()) {
      if (!out.empty()) out += " + ";
      out += "O(z^" + std::to_string(cap_) + ")";
    }
    return out.empty() ? "0" : out;
  }

 private:
  Coefficients coeffs_;
  Exponent floor_ = kExact;
  Exponent cap_ = kExact;
};

// ∂_z: z^m ↦ m z^{m-1}; floor and cap drop by one.
template <CoefficientRing C>
TruncSeries<C> derivative_z(const TruncSeries<C>& s) {
  typename TruncSeries<C>::Coefficients out;
  for (const auto& [m, c] : s.coeffs())
    if (m != 0) out.emplace(m - 1, c * Rational(m));
  return TruncSeries<C>(std::move(out), exponent_add(s.floor(), -1), exponent_add(s.cap(), -1));
}

// s^k for k >= 0, by repeated multiplication.
template <CoefficientRing C>
TruncSeries<C> power(const TruncSeries<C>& s, std::uint32_t k) {
  TruncSeries<C> r = TruncSeries<C>::constant(C(Rational(1)));
  for (std::uint32_t i = 0; i < k; ++i) r = r * s;
  return r;
}

// Coefficientwise agreement below the smaller cap, using C's equality.
template <CoefficientRing C>
bool agree_on_joint_window(const TruncSeries<C>& s, const TruncSeries<C>& t) {
  const Exponent cap = std::min(s.cap(), t.cap());
  const C zero(Rational(0));
  auto value = [&zero](const TruncSeries<C>& u, Exponent m) -> const C& {
    auto it = u.coeffs().find(m);
    return it == u.coeffs().end() ? zero : it->second;
  };
  for (const auto* u : {&s, &t})
    for (auto it = u->coeffs().begin(); it != u->coeffs().lower_bound(cap); ++it)
      if (!(value(s, it->first) == value(t, it->first))) return false;
  return true;
}

// z-adic order of s after reduction to a projection level.
struct ZOrder {
  enum class Kind { Finite, AtLeastCap, Zero };
  Kind kind = Kind::Zero;
  Exponent exponent = 0;  // the order, or the cap when kind == AtLeastCap

  friend bool operator==(const ZOrder&, const ZOrder&) = default;
};

// Least m whose coefficient survives `vanishes`. Every known coefficient
// vanishing gives AtLeastCap, or Zero when the series is exact.
template <CoefficientRing C, std::predicate<const C&> Vanishes>
ZOrder z_order(const TruncSeries<C>& s, Vanishes&& vanishes) {
  for (const auto& [m, c] : s.coeffs())
    if (!vanishes(c)) return {ZOrder::Kind::Finite, m};
  if (s.is_exact()) return {ZOrder::Kind::Zero, 0};
  return {ZOrder::Kind::AtLeastCap, s.cap()};
}

// Order in the level-n image ring; needs vanishes_at_level(const C&, n).
template <CoefficientRing C>
ZOrder z_order(const TruncSeries<C>& s, std::int64_t level) {
  return z_order(s, [level](const C& c) { return vanishes_at_level(c, level); });
}

}  // namespace loopalg
