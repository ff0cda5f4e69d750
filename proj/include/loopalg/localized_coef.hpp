#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "loopalg/poly.hpp"
#include "loopalg/rational.hpp"

namespace loopalg {

// An element num / unit^pow of C_n = A_n[unit^{-1}], where unit is the
// designated leading coefficient (f_min). Elements built from plain
// rationals carry no unit and adopt the one of whatever they meet.
class LocalizedCoef {
 public:
  using Unit = std::shared_ptr<const Poly>;

  LocalizedCoef() = default;
  LocalizedCoef(const Rational& q) : num_(q) {}  // NOLINT(google-explicit-constructor)
  explicit LocalizedCoef(Poly num) : num_(std::move(num)) {}
  // Requires unit != nullptr and *unit != 0 whenever pow > 0.
  LocalizedCoef(Poly num, std::uint32_t pow, Unit unit);

  // 1 / unit.
  static LocalizedCoef inverse_of(Unit unit) { return LocalizedCoef(Poly(1), 1, std::move(unit)); }

  const Poly& num() const { return num_; }
  std::uint32_t pow() const { return pow_; }
  const Unit& unit() const { return unit_; }

  bool is_zero() const { return num_.is_zero(); }

  friend LocalizedCoef operator+(const LocalizedCoef& a, const LocalizedCoef& b);
  friend LocalizedCoef operator-(const LocalizedCoef& a, const LocalizedCoef& b);
  friend LocalizedCoef operator*(const LocalizedCoef& a, const LocalizedCoef& b);
  friend LocalizedCoef operator*(const LocalizedCoef& a, const Rational& q);
  friend LocalizedCoef operator-(const LocalizedCoef& a);

  // Cross-multiplication: a.num * unit^b.pow == b.num * unit^a.pow.
  friend bool operator==(const LocalizedCoef& a, const LocalizedCoef& b);

  // "num", or "num/unit^pow" with parentheses around multi-term parts.
  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  std::uint32_t pow_ = 0;
  Unit unit_;
};

// Zero in the level-n image of C_n: the numerator dies under π_n.
// Throws non_invertible_error if the unit itself dies at that level.
bool vanishes_at_level(const LocalizedCoef& c, std::int64_t n);

}  // namespace loopalg
