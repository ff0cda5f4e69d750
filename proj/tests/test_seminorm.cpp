#include <doctest.h>

#include <vector>

#include "loopalg/random.hpp"
#include "loopalg/seminorm.hpp"
#include "support.hpp"

using namespace loopalg;
using namespace loopalg::testing;

namespace {

const Rational half{1, 2};

SemiNormParams at(std::int64_t n) { return {half, n}; }

}  // namespace

TEST_CASE("seminorm is epsilon to the order after projection") {
  const PolySeries s = series({{-2, x(1, -2)}, {0, x(1, 0)}}, 3);
  CHECK(seminorm(s, at(1)).value == 1);
  CHECK(seminorm(s, at(2)).value == 4);
  CHECK(*seminorm(s, at(2)).exponent == -2);
  CHECK(seminorm(PolySeries(), at(0)) == SemiNormValue::zero());

  const SemiNormValue flagged = seminorm(series({{-3, x(1, -3)}}, 2), at(1));
  CHECK(flagged.is_upper_bound);
  CHECK(flagged.value == Rational(1, 4));

  CHECK(seminorm(s, SemiNormParams{Rational(1, 3), 2}).value == 9);
  CHECK_THROWS_AS(seminorm(s, SemiNormParams{Rational(1), 0}), std::invalid_argument);
  CHECK_THROWS_AS(seminorm(s, SemiNormParams{Rational(0), 0}), std::invalid_argument);
}

TEST_CASE("check_good on ev of coordinates and powers") {
  const std::vector<std::int64_t> levels{0, 1, 2};
  for (const char* text : {"x1", "x1^2"}) {
    const PolySeries s = compose_ev(parse_poly(text, 1), 1, 2, 6);
    const CheckReport r = check_good(s, levels, 3, half);
    CHECK(r.records.size() == 9);
    CHECK(r.all_passed());
  }
  const PolySeries ev = ev_series(1, 2, 4)[0];
  for (const std::int64_t n : levels) CHECK(seminorm(ev, at(n)).value == pow(half, -n));

  const CheckReport zero = check_good(PolySeries(), levels, 2, half);
  CHECK(zero.failures() == zero.records.size());
  CHECK_FALSE(zero.records.empty());
}

TEST_CASE("check_isometry on hand examples") {
  const Poly f = parse_poly("x1", 1);
  const std::vector<std::int64_t> one{1};
  const PolySeries a = series({{-1, x(1, -1)}}, kExact);
  const std::vector<IsometryPair> pairs{{a, a}, {PolySeries(), PolySeries()}};
  const CheckReport r = check_isometry(pairs, one, half, f, 1);
  CHECK(r.all_passed());
  CHECK(*r.records[0].lhs_exponent == -1);
  CHECK_FALSE(r.records[1].lhs_exponent.has_value());

  // y_{-1} x1_{-1} is a relation of B_1, so adding it changes nothing.
  const PolySeries perturbed = a + series({{-1, y(-1) * x(1, -1)}}, kExact);
  CHECK(complement_seminorm(perturbed, f, 1, at(1)).value == 2);
  // y_0 x1_{-1} is not.
  const PolySeries moved = a + series({{-2, y(1) * x(1, -1) * x(1, -1)}}, kExact);
  CHECK(complement_seminorm(moved, f, 1, at(1)).value == 4);
}

TEST_CASE("isometry survives perturbation by complement relations") {
  const Poly f = parse_poly("x1*x2 + 1", 2);
  const std::int64_t rel_level = 2;
  const auto rels = complement_relations(f, 2, rel_level, 2);
  SampleRng rng(17);
  SeriesShape shape;
  shape.coefficients.d = 2;
  shape.coefficients.min_index = -rel_level;
  std::vector<IsometryPair> pairs;
  for (int i = 0; i < 25; ++i) {
    const PolySeries a = random_series(rng, shape);
    PolySeries image = a;
    for (int k = 0; k < 2; ++k) {
      const Relation& r = rels[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rels.size()) - 1))];
      const Exponent at_m = rng.uniform(a.floor() - 2, a.cap() - 1);
      image = image + PolySeries::monomial(r.generator * Poly(rng.uniform(1, 3)), at_m);
    }
    pairs.push_back({a, image});
  }
  const std::vector<std::int64_t> levels{0, 1, 2};
  const CheckReport r = check_isometry(pairs, levels, half, f, 2);
  CHECK(r.failures() == 0);
}

namespace {

SeriesShape small_shape() {
  SeriesShape s;
  s.coefficients.d = 2;
  s.coefficients.max_terms = 2;
  return s;
}

}  // namespace

TEST_CASE("ultrametric and sub-multiplicative on random pairs") {
  SampleRng rng(23);
  std::vector<std::pair<PolySeries, PolySeries>> pairs;
  for (int i = 0; i < 80; ++i) pairs.emplace_back(random_series(rng, small_shape()), random_series(rng, small_shape()));
  // Cancellation in the sum.
  pairs.emplace_back(pairs[0].first, -pairs[0].first);
  const std::vector<std::int64_t> levels{0, 1, 2, 3};
  const CheckReport r = check_ultrametric(pairs, levels, half);
  CHECK(r.records.size() == 2 * pairs.size() * levels.size());
  CHECK(r.all_passed());
}

TEST_CASE("flag-aware comparison") {
  const SemiNormValue exact_big = SemiNormValue::power(half, -2);
  const SemiNormValue small = SemiNormValue::power(half, 3);
  const SemiNormValue flagged_big = SemiNormValue::power(half, -2, true);
  CHECK_FALSE(no_violation_le(exact_big, small));
  CHECK(no_violation_le(flagged_big, small));
  CHECK(no_violation_le(small, exact_big));
  CHECK(no_violation_le(SemiNormValue::zero(), small));
  CHECK(multiply(small, SemiNormValue::zero(), half).is_zero());
  CHECK(multiply(small, exact_big, half) == SemiNormValue::power(half, 1));
  CHECK(inverse_power(small, 2, half) == SemiNormValue::power(half, -6));
}

TEST_CASE("topology witness: x_{-m} z^{-m} tends to 0 at every level") {
  for (std::int64_t n = 0; n <= 4; ++n) {
    for (std::int64_t m = 0; m <= 8; ++m) {
      const PolySeries s = PolySeries::monomial(x(1, -m), -m);
      const SemiNormValue v = seminorm(s, at(n));
      if (m <= n) {
        CHECK(v.value == pow(half, -m));
      } else {
        CHECK(v.is_zero());
      }
    }
  }
}

TEST_CASE("homogeneity on a good element") {
  const PolySeries s = compose_ev(parse_poly("x1*x2 + 1", 2), 2, 3, 4);
  const std::vector<std::int64_t> levels{0, 1, 2, 3};
  REQUIRE(check_good(s, levels, 3, half).all_passed());
  SampleRng rng(29);
  SeriesShape shape = small_shape();
  shape.min_width = 4;
  for (int trial = 0; trial < 60; ++trial) {
    const PolySeries t = random_series(rng, shape);
    const auto n = rng.uniform(0, 3);
    const auto k = static_cast<std::uint32_t>(rng.uniform(1, 3));
    const SemiNormValue nt = seminorm(t, at(n));
    if (nt.is_zero() || nt.is_upper_bound) continue;
    PolySeries prod = t;
    for (std::uint32_t i = 0; i < k; ++i) prod = prod * s;
    const SemiNormValue lhs = seminorm(prod, at(n));
    if (lhs.is_upper_bound) continue;
    SemiNormValue rhs = nt;
    for (std::uint32_t i = 0; i < k; ++i) rhs = multiply(rhs, seminorm(s, at(n)), half);
    CHECK(lhs == rhs);
  }
}
