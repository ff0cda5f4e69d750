#include "loopalg/random.hpp"

namespace loopalg {

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

bool SampleRng::chance(std::uint32_t numerator, std::uint32_t denominator) {
  return engine_() % denominator < numerator;
}

Poly random_poly(SampleRng& rng, const PolyShape& shape) {
  Poly p;
  while (p.is_zero()) {
    const auto terms = rng.uniform(1, shape.max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
      Monomial m;
      const auto degree = rng.uniform(0, shape.max_degree);
      for (std::int64_t k = 0; k < degree; ++k) {
        const int i = static_cast<int>(rng.uniform(1, shape.d));
        m = m * Monomial(VarRef::x(i, rng.uniform(shape.min_index, shape.max_index)));
      }
      std::int64_t c = 0;
      while (c == 0) c = rng.uniform(-shape.coefficient_bound, shape.coefficient_bound);
      p.add_term(m, Rational(c));
    }
  }
  return p;
}

PolySeries random_series(SampleRng& rng, const SeriesShape& shape) {
  const Exponent floor = rng.uniform(shape.min_floor, shape.max_floor);
  const Exponent cap = floor + rng.uniform(shape.min_width, shape.max_width);
  PolySeries::Coefficients coeffs;
  for (Exponent m = floor; m < cap; ++m)
    if (rng.chance(2, 3)) coeffs.emplace(m, random_poly(rng, shape.coefficients));
  return PolySeries(std::move(coeffs), floor, cap);
}

std::vector<IsometryPair> random_isometry_pairs(SampleRng& rng, const Poly& f, int d, std::int64_t level,
                                                std::size_t count) {
  SeriesShape shape;
  shape.coefficients.d = d;
  shape.coefficients.min_index = -level;
  shape.coefficients.max_terms = 2;
  const auto rels = complement_relations(f, d, level, 2);
  std::vector<IsometryPair> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const PolySeries a = random_series(rng, shape);
    PolySeries image = a;
    if (!rels.empty()) {
      const auto last = static_cast<std::int64_t>(rels.size()) - 1;
      for (int k = 0; k < 2; ++k) {
        const Relation& r = rels[static_cast<std::size_t>(rng.uniform(0, last))];
        const Exponent at = rng.uniform(a.floor() - 2, a.cap() - 1);
        image = image + PolySeries::monomial(r.generator * Poly(rng.uniform(1, 3)), at);
      }
    }
    pairs.push_back({a, image});
  }
  return pairs;
}

std::vector<std::pair<PolySeries, PolySeries>> random_series_pairs(SampleRng& rng, int d, std::size_t count) {
  SeriesShape shape;
  shape.coefficients.d = d;
  shape.coefficients.max_terms = 2;
  std::vector<std::pair<PolySeries, PolySeries>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    PolySeries s = random_series(rng, shape);
    PolySeries t = random_series(rng, shape);
    pairs.emplace_back(std::move(s), std::move(t));
  }
  return pairs;
}

}  // namespace loopalg
