#include "loopalg/seminorm.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopalg {

void SemiNormParams::validate() const {
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("epsilon must lie strictly between 0 and 1, got " + to_string(epsilon));
  if (level < 0) throw std::invalid_argument("semi-norm level must be nonnegative");
}

SemiNormValue SemiNormValue::power(const Rational& epsilon, Exponent e, bool upper_bound) {
  return {e, upper_bound, loopalg::pow(epsilon, e)};
}

SemiNormValue SemiNormValue::from_order(const ZOrder& order, const Rational& epsilon) {
  switch (order.kind) {
    case ZOrder::Kind::Finite:
      return power(epsilon, order.exponent);
    case ZOrder::Kind::AtLeastCap:
      return power(epsilon, order.exponent, true);
    case ZOrder::Kind::Zero:
      break;
  }
  return zero();
}

SemiNormValue multiply(const SemiNormValue& a, const SemiNormValue& b, const Rational& epsilon) {
  if (a.is_zero() || b.is_zero()) {
    // 0 times an upper bound is still exactly 0.
    return SemiNormValue::zero();
  }
  return SemiNormValue::power(epsilon, *a.exponent + *b.exponent, a.is_upper_bound || b.is_upper_bound);
}

SemiNormValue inverse_power(const SemiNormValue& a, std::uint32_t k, const Rational& epsilon) {
  if (a.is_zero() || a.is_upper_bound)
    throw std::invalid_argument("only exact nonzero semi-norm values can be inverted");
  return SemiNormValue::power(epsilon, -*a.exponent * static_cast<Exponent>(k));
}

bool no_violation_le(const SemiNormValue& lhs, const SemiNormValue& rhs) {
  return lhs.value <= rhs.value || lhs.is_upper_bound;
}

std::string value_text(const SemiNormValue& v) { return to_string(v.value); }

SemiNormValue seminorm(const PolySeries& s, const SemiNormParams& p) {
  p.validate();
  return SemiNormValue::from_order(z_order(s, p.level), p.epsilon);
}

SemiNormValue seminorm(const ModelSeries& s, const SemiNormParams& p) {
  p.validate();
  return SemiNormValue::from_order(z_order(s, p.level), p.epsilon);
}

bool CheckReport::all_passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

CheckReport check_good(const PolySeries& s, std::span<const std::int64_t> levels, std::uint32_t max_power,
                       const Rational& epsilon) {
  CheckReport report;
  for (const std::int64_t n : levels) {
    const SemiNormParams params{epsilon, n};
    params.validate();
    // π_n is a ring map, so |s^k|_n is the order of (π_n s)^k in A_n((z)).
    const PolySeries base = s.map_coefficients([n](const Poly& c) { return project(c, n); }).tightened();
    const SemiNormValue norm = seminorm(base, params);
    const bool usable = !norm.is_zero() && !norm.is_upper_bound;
    PolySeries power_k = PolySeries::constant(Poly(1));
    for (std::uint32_t k = 1; k <= max_power; ++k) {
      CheckRecord rec;
      rec.check = "good";
      rec.level = n;
      rec.power = k;
      if (norm.exponent) rec.rhs_exponent = *norm.exponent * static_cast<Exponent>(k);
      rec.upper_bound_involved = norm.is_upper_bound;
      if (usable) {
        power_k = power_k * base;
        const SemiNormValue lhs = seminorm(power_k, params);
        rec.lhs_exponent = lhs.exponent;
        rec.upper_bound_involved = rec.upper_bound_involved || lhs.is_upper_bound;
        rec.pass = !lhs.is_upper_bound && lhs.exponent == rec.rhs_exponent;
      } else {
        rec.lhs_exponent = norm.exponent;
        rec.pass = false;
      }
      report.records.push_back(rec);
    }
  }
  return report;
}

namespace {

std::optional<Exponent> max_inverse_index(const PolySeries& s) {
  std::optional<Exponent> best;
  for (const auto& [m, c] : s.coeffs())
    for (const auto& [mono, q] : c.terms())
      for (const auto& [v, e] : mono.entries())
        if (v.family == Family::Inverse) best = std::max(best.value_or(v.index), v.index);
  return best;
}

SemiNormValue complement_seminorm_with(const PolySeries& image, const HypersurfaceModel& model,
                                       const SemiNormParams& p) {
  const std::int64_t n = p.level;
  const ModelSeries in_model = image.map_coefficients(
      [&](const Poly& c) { return substitute_inverse(project(c, n), model.inverse); });
  return seminorm(in_model, p);
}

HypersurfaceModel model_covering(const Poly& f, int d, std::int64_t n, std::optional<Exponent> max_index) {
  return build_hypersurface_model(f, d, n, max_index ? *max_index + 1 : 1);
}

}  // namespace

SemiNormValue complement_seminorm(const PolySeries& image, const Poly& f, int d, const SemiNormParams& p) {
  p.validate();
  return complement_seminorm_with(image, model_covering(f, d, p.level, max_inverse_index(image)), p);
}

CheckReport check_isometry(std::span<const IsometryPair> pairs, std::span<const std::int64_t> levels,
                           const Rational& epsilon, const Poly& f, int d) {
  std::optional<Exponent> max_index;
  for (const auto& pair : pairs) {
    auto idx = max_inverse_index(pair.image);
    if (idx) max_index = std::max(max_index.value_or(*idx), *idx);
  }
  CheckReport report;
  for (const std::int64_t n : levels) {
    const SemiNormParams params{epsilon, n};
    params.validate();
    const HypersurfaceModel model = model_covering(f, d, n, max_index);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const SemiNormValue lhs = seminorm(pairs[i].a, params);
      const SemiNormValue rhs = complement_seminorm_with(pairs[i].image, model, params);
      CheckRecord rec;
      rec.check = "isometry";
      rec.sample = i;
      rec.level = n;
      rec.lhs_exponent = lhs.exponent;
      rec.rhs_exponent = rhs.exponent;
      rec.upper_bound_involved = lhs.is_upper_bound || rhs.is_upper_bound;
      rec.pass = lhs == rhs;
      report.records.push_back(rec);
    }
  }
  return report;
}

CheckReport check_ultrametric(std::span<const std::pair<PolySeries, PolySeries>> pairs,
                              std::span<const std::int64_t> levels, const Rational& epsilon) {
  CheckReport report;
  for (const std::int64_t n : levels) {
    const SemiNormParams params{epsilon, n};
    params.validate();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [s, t] = pairs[i];
      const SemiNormValue ns = seminorm(s, params);
      const SemiNormValue nt = seminorm(t, params);

      const SemiNormValue sum = seminorm(s + t, params);
      const SemiNormValue& larger = ns.value >= nt.value ? ns : nt;
      CheckRecord add_rec;
      add_rec.check = "ultrametric";
      add_rec.sample = i;
      add_rec.level = n;
      add_rec.lhs_exponent = sum.exponent;
      add_rec.rhs_exponent = larger.exponent;
      add_rec.upper_bound_involved = sum.is_upper_bound || ns.is_upper_bound || nt.is_upper_bound;
      add_rec.pass = no_violation_le(sum, larger);
      report.records.push_back(add_rec);

      const SemiNormValue prod = seminorm(s * t, params);
      const SemiNormValue bound = multiply(ns, nt, epsilon);
      CheckRecord mul_rec;
      mul_rec.check = "submultiplicative";
      mul_rec.sample = i;
      mul_rec.level = n;
      mul_rec.lhs_exponent = prod.exponent;
      mul_rec.rhs_exponent = bound.exponent;
      mul_rec.upper_bound_involved = prod.is_upper_bound || bound.is_upper_bound;
      mul_rec.pass = no_violation_le(prod, bound);
      report.records.push_back(mul_rec);
    }
  }
  return report;
}

}  // namespace loopalg
