#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loopalg/loopspace.hpp"
#include "loopalg/rational.hpp"
#include "loopalg/series.hpp"

namespace loopalg {

// One member |-|_level of the semi-norm family, |a| = epsilon^ord(π_level a).
struct SemiNormParams {
  Rational epsilon{1, 2};
  std::int64_t level = 0;

  // Throws std::invalid_argument unless 0 < epsilon < 1 and level >= 0.
  void validate() const;
};

// epsilon^exponent, or exactly 0 when exponent is empty. An upper bound
// comes from a series whose known coefficients all vanish: the true value
// is at most the recorded one.
struct SemiNormValue {
  std::optional<Exponent> exponent;
  bool is_upper_bound = false;
  Rational value;

  static SemiNormValue zero() { return {}; }
  static SemiNormValue power(const Rational& epsilon, Exponent e, bool upper_bound = false);
  static SemiNormValue from_order(const ZOrder& order, const Rational& epsilon);

  bool is_zero() const { return !exponent.has_value(); }

  friend bool operator==(const SemiNormValue&, const SemiNormValue&) = default;
};

// Product of two values (exponents add, flags combine).
SemiNormValue multiply(const SemiNormValue& a, const SemiNormValue& b, const Rational& epsilon);

// a^{-k} for a nonzero, unflagged a.
SemiNormValue inverse_power(const SemiNormValue& a, std::uint32_t k, const Rational& epsilon);

// lhs <= rhs unless lhs is a known exact value that exceeds rhs. A flagged
// lhs that exceeds rhs witnesses nothing and is not a violation.
bool no_violation_le(const SemiNormValue& lhs, const SemiNormValue& rhs);

// "p/q" of the value (or "0").
std::string value_text(const SemiNormValue& v);

SemiNormValue seminorm(const PolySeries& s, const SemiNormParams& p);

// Semi-norm of an element of C_n((z)); requires p.level >= the model level.
SemiNormValue seminorm(const ModelSeries& s, const SemiNormParams& p);

// One line of a property report.
struct CheckRecord {
  std::string check;
  std::optional<std::size_t> sample;
  std::int64_t level = 0;
  std::optional<std::uint32_t> power;
  std::optional<Exponent> lhs_exponent;
  std::optional<Exponent> rhs_exponent;
  bool pass = false;
  bool upper_bound_involved = false;
};

struct CheckReport {
  std::vector<CheckRecord> records;

  bool all_passed() const;
  std::size_t failures() const;
};

// For every level n and 1 <= k <= max_power: |s|_n != 0, unflagged, and
// |s^k|_n = |s|_n^k. Powers are formed in A_n((z)) after projection.
CheckReport check_good(const PolySeries& s, std::span<const std::int64_t> levels, std::uint32_t max_power,
                       const Rational& epsilon);

// Semi-norm of a B-side series at level n, evaluated through the map
// B_n -> C_n of the hypersurface f (y_j -> inverse coefficients).
SemiNormValue complement_seminorm(const PolySeries& image, const Poly& f, int d, const SemiNormParams& p);

struct IsometryPair {
  PolySeries a;
  PolySeries image;
};

// |a|_n == |image|_n for every pair and level, the B-side through f.
CheckReport check_isometry(std::span<const IsometryPair> pairs, std::span<const std::int64_t> levels,
                           const Rational& epsilon, const Poly& f, int d);

// |s+t| <= max(|s|,|t|) and |st| <= |s||t| for every pair and level.
CheckReport check_ultrametric(std::span<const std::pair<PolySeries, PolySeries>> pairs,
                              std::span<const std::int64_t> levels, const Rational& epsilon);

}  // namespace loopalg
