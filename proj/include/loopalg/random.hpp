#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "loopalg/loopspace.hpp"
#include "loopalg/poly.hpp"
#include "loopalg/seminorm.hpp"

namespace loopalg {

// Seeded generator for the randomized suites. Draws are derived from raw
// mt19937_64 output only, so a seed gives the same samples everywhere.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint32_t numerator, std::uint32_t denominator);

 private:
  std::mt19937_64 engine_;
};

struct PolyShape {
  int d = 1;
  std::int64_t min_index = -5;
  std::int64_t max_index = 5;
  int max_terms = 3;
  int max_degree = 2;
  std::int64_t coefficient_bound = 3;
};

// Nonzero polynomial in the x^i_j with the given shape.
Poly random_poly(SampleRng& rng, const PolyShape& shape);

struct SeriesShape {
  PolyShape coefficients;
  Exponent min_floor = -4;
  Exponent max_floor = 0;
  Exponent min_width = 1;
  Exponent max_width = 7;
};

// Random window, each slot filled with probability 2/3.
PolySeries random_series(SampleRng& rng, const SeriesShape& shape);

// A-side series with indices >= -level paired with B-side images: the same
// series plus random multiples of complement relations of f at that level.
std::vector<IsometryPair> random_isometry_pairs(SampleRng& rng, const Poly& f, int d, std::int64_t level,
                                                std::size_t count);

std::vector<std::pair<PolySeries, PolySeries>> random_series_pairs(SampleRng& rng, int d, std::size_t count);

}  // namespace loopalg
