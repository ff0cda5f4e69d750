#include <doctest.h>

#include "loopalg/random.hpp"
#include "support.hpp"

using namespace loopalg;
using namespace loopalg::testing;

TEST_CASE("series_add follows the joint precision window") {
  const PolySeries s = series({{-1, 1}, {0, 1}}, 3);
  const PolySeries t = series({{-1, -1}}, 2);
  const PolySeries sum = s + t;
  CHECK(sum.cap() == 2);
  CHECK(sum.floor() == -1);
  CHECK(sum.coeffs().size() == 1);
  CHECK(sum.coeff(0) == Poly(1));

  CHECK(s + PolySeries() == s);

  const PolySeries u = series({{1, 1}}, 2) + series({{2, 1}}, 5);
  CHECK(u == series({{1, 1}}, 2));
  CHECK(u.to_string() == "1*z^1 + O(z^2)");
}

TEST_CASE("series_mul cap and floor rules") {
  const PolySeries a = series({{-1, 1}}, 2) * series({{1, 1}}, 2);
  CHECK(a.cap() == 1);
  CHECK(a.floor() == 0);
  CHECK(a.to_string() == "1*z^0 + O(z^1)");

  const PolySeries b = series({{0, 1}, {1, 1}}, 3) * series({{0, 1}, {1, -1}}, 3);
  CHECK(b.cap() == 3);
  CHECK(b == series({{0, 1}, {2, -1}}, 0, 3));

  const PolySeries x_series = series({{-1, x(1, -1)}, {0, x(1, 0)}}, 1);
  const PolySeries sq = x_series * x_series;
  CHECK(sq.cap() == 0);
  CHECK(sq.floor() == -2);
  CHECK(sq.coeff(-2) == P("x1_-1^2"));
  CHECK(sq.coeff(-1) == P("2*x1_-1*x1_0"));
  CHECK_THROWS_AS(sq.coeff(0), precision_exhausted);
  CHECK(sq.to_string() == "x1_-1^2*z^-2 + 2*x1_-1*x1_0*z^-1 + O(z^0)");
}

TEST_CASE("series_mul reports an empty window") {
  const PolySeries nothing = PolySeries::unknown(3);
  CHECK_THROWS_AS(nothing * series({{-1, 1}}, 5), precision_exhausted);
  // The exact zero absorbs anything.
  CHECK(PolySeries() * series({{-1, 1}}, 5) == PolySeries());
}

TEST_CASE("derivative_z") {
  CHECK(derivative_z(series({{2, 1}}, kExact)) == series({{1, 2}}, kExact));
  CHECK(derivative_z(PolySeries::constant(Poly(7))).coeffs().empty());
  const PolySeries s = series({{-1, x(1, -1)}, {0, x(1, 0)}, {1, x(1, 1)}}, 2);
  const PolySeries ds = derivative_z(s);
  CHECK(ds.cap() == 1);
  CHECK(ds.floor() == -2);
  CHECK(ds == series({{-2, -x(1, -1)}, {0, x(1, 1)}}, -2, 1));
}

TEST_CASE("z_order per projection level") {
  const PolySeries s = series({{-2, x(1, -2)}, {0, x(1, 0)}}, 3);
  CHECK(z_order(s, 1) == ZOrder{ZOrder::Kind::Finite, 0});
  CHECK(z_order(s, 2) == ZOrder{ZOrder::Kind::Finite, -2});
  const PolySeries dead = series({{-3, x(1, -3)}, {1, x(1, -5) * x(1, 2)}}, 4);
  CHECK(z_order(dead, 2) == ZOrder{ZOrder::Kind::AtLeastCap, 4});
  CHECK(z_order(PolySeries::constant(x(1, -1)), 0) == ZOrder{ZOrder::Kind::Zero, 0});
}

TEST_CASE("print format") {
  const PolySeries s = series({{-1, x(1, -1) * x(2, 0) + x(1, 0) * x(2, -1)}, {0, Poly(1)}}, 1);
  CHECK(s.to_string() == "(x1_-1*x2_0 + x1_0*x2_-1)*z^-1 + 1*z^0 + O(z^1)");
  CHECK(PolySeries().to_string() == "0");
  CHECK(PolySeries::unknown(4).to_string() == "O(z^4)");
}

namespace {

SeriesShape shape() {
  SeriesShape s;
  s.coefficients.d = 2;
  s.coefficients.max_terms = 2;
  return s;
}

// The same series known to `extra` more exponents, with fresh coefficients there.
PolySeries extend(SampleRng& rng, const PolySeries& s, Exponent extra) {
  PolySeries::Coefficients c = s.coeffs();
  for (Exponent m = s.cap(); m < s.cap() + extra; ++m)
    if (rng.chance(1, 2)) c.emplace(m, random_poly(rng, shape().coefficients));
  return PolySeries(std::move(c), s.floor(), s.cap() + extra);
}

}  // namespace

TEST_CASE("precision soundness: larger input caps never change known coefficients") {
  SampleRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const PolySeries s = random_series(rng, shape());
    const PolySeries t = random_series(rng, shape());
    const PolySeries s2 = extend(rng, s, rng.uniform(1, 4));
    const PolySeries t2 = extend(rng, t, rng.uniform(1, 4));
    for (const auto& [narrow, wide] : {std::pair{s + t, s2 + t2}, std::pair{s * t, s2 * t2},
                                       std::pair{derivative_z(s), derivative_z(s2)}}) {
      CHECK(wide.cap() >= narrow.cap());
      CHECK(wide.truncated(narrow.cap()).coeffs() == narrow.coeffs());
    }
  }
}

TEST_CASE("Leibniz rule and order subadditivity") {
  SampleRng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const PolySeries s = random_series(rng, shape());
    const PolySeries t = random_series(rng, shape());
    const PolySeries lhs = derivative_z(s * t);
    const PolySeries rhs = derivative_z(s) * t + s * derivative_z(t);
    CHECK(agree_on_joint_window(lhs, rhs));

    const auto level = rng.uniform(0, 5);
    const ZOrder os = z_order(s, level);
    const ZOrder ot = z_order(t, level);
    const ZOrder ost = z_order(s * t, level);
    if (os.kind == ZOrder::Kind::Finite && ot.kind == ZOrder::Kind::Finite) {
      if (ost.kind == ZOrder::Kind::Finite) {
        CHECK(ost.exponent == os.exponent + ot.exponent);  // A_n is a domain
      } else {
        // Leading product lies beyond the product's precision.
        CHECK(ost.kind == ZOrder::Kind::AtLeastCap);
        CHECK(ost.exponent <= os.exponent + ot.exponent);
      }
    }
  }
}
