#include "loopalg/localized.hpp"

#include <algorithm>

namespace loopalg {
namespace {

PolySeries power_of(const PolySeries& a, std::uint32_t k) { return power(a, k); }

}  // namespace

std::string LocalizedElem::to_string() const {
  if (pow == 0) return num.to_string();
  std::string n = num.to_string();
  if (n.find(' ') != std::string::npos) n = "(" + n + ")";
  return n + " / ev(f)^" + std::to_string(pow);
}

std::optional<PolySeries> divide_series_exact(const PolySeries& b, const PolySeries& a) {
  const PolySeries at = a.tightened();
  if (at.coeffs().empty()) throw non_invertible_error("division by a series with no known nonzero coefficient");
  if (b.is_exact() && b.coeffs().empty()) return PolySeries();
  const auto& [m, lead] = *at.coeffs().begin();
  const PolySeries bt = b.tightened();
  const Exponent floor_q = bt.floor() - m;

  Exponent cap_q = std::min(exponent_add(bt.cap(), -m), exponent_add(at.cap(), exponent_add(-2 * m, bt.floor())));
  const bool exact = cap_q >= kExact;
  if (exact) {
    // Both exact: a Laurent-polynomial quotient cannot reach past this.
    cap_q = bt.coeffs().rbegin()->first - at.coeffs().rbegin()->first + 1;
    if (cap_q <= floor_q) return std::nullopt;
  }

  PolySeries::Coefficients q;
  for (Exponent k = floor_q; k < cap_q; ++k) {
    Poly r = bt.coeff(k + m);
    for (const auto& [j, qj] : q) {
      auto ai = at.coeffs().find(k + m - j);
      if (ai != at.coeffs().end()) r -= ai->second * qj;
    }
    auto qk = divide_exact(r, lead);
    if (!qk) return std::nullopt;
    if (!qk->is_zero()) q.emplace(k, std::move(*qk));
  }
  if (exact) {
    PolySeries quotient = PolySeries::exact(std::move(q));
    if (!(quotient * at == bt)) return std::nullopt;
    return quotient;
  }
  return PolySeries(std::move(q), floor_q, cap_q);
}

LocalizedElem normalize(LocalizedElem u, const PolySeries& a) {
  if (u.num.coeffs().empty()) {
    u.pow = 0;
    return u;
  }
  while (u.pow > 0) {
    auto q = divide_series_exact(u.num, a);
    if (!q || q->has_empty_window()) break;
    u.num = std::move(*q);
    --u.pow;
  }
  return u;
}

LocalizedElem loc_add(const LocalizedElem& u, const LocalizedElem& v, const PolySeries& a) {
  const std::uint32_t top = std::max(u.pow, v.pow);
  PolySeries lhs = u.pow == top ? u.num : u.num * power_of(a, top - u.pow);
  PolySeries rhs = v.pow == top ? v.num : v.num * power_of(a, top - v.pow);
  return normalize({lhs + rhs, top}, a);
}

LocalizedElem loc_scale(const LocalizedElem& u, const Rational& q) {
  LocalizedElem r{u.num * q, u.pow};
  if (r.num.coeffs().empty()) r.pow = 0;
  return r;
}

LocalizedElem loc_sub(const LocalizedElem& u, const LocalizedElem& v, const PolySeries& a) {
  return loc_add(u, loc_scale(v, -1), a);
}

LocalizedElem loc_mul(const LocalizedElem& u, const LocalizedElem& v, const PolySeries& a) {
  return normalize({u.num * v.num, u.pow + v.pow}, a);
}

LocalizedElem loc_shift(const LocalizedElem& u, Exponent k) { return {u.num.shifted(k), u.pow}; }

bool loc_equal(const LocalizedElem& u, const LocalizedElem& v, const PolySeries& a) {
  const PolySeries lhs = u.pow >= v.pow ? u.num : u.num * power_of(a, v.pow - u.pow);
  const PolySeries rhs = v.pow >= u.pow ? v.num : v.num * power_of(a, u.pow - v.pow);
  return agree_on_joint_window(lhs, rhs);
}

SemiNormValue loc_seminorm(const LocalizedElem& u, const PolySeries& a, const SemiNormParams& p) {
  const SemiNormValue na = seminorm(a, p);
  if (na.is_zero() || na.is_upper_bound)
    throw good_element_violation("|ev(f)| is " + std::string(na.is_zero() ? "zero" : "undetermined") +
                                 " at level " + std::to_string(p.level));
  const SemiNormValue nb = seminorm(u.num, p);
  if (u.pow == 0) return nb;
  return multiply(nb, inverse_power(na, u.pow, p.epsilon), p.epsilon);
}

LocalizedElem loc_derivative(const LocalizedElem& u, const PolySeries& a) {
  if (u.pow == 0) return {derivative_z(u.num), 0};
  PolySeries num = derivative_z(u.num) * a - (u.num * derivative_z(a)) * Rational(u.pow);
  return normalize({std::move(num), u.pow + 1}, a);
}

ModelSeries loc_to_model(const LocalizedElem& u, const HypersurfaceModel& model) {
  const std::int64_t n = model.level;
  ModelSeries result = u.num.map_coefficients([n](const Poly& c) { return LocalizedCoef(project(c, n)); });
  for (std::uint32_t k = 0; k < u.pow; ++k) result = result * model.inverse;
  return result;
}

std::vector<SemiNormValue> cauchy_distances(std::span<const LocalizedElem> sequence, const PolySeries& a,
                                            const SemiNormParams& p) {
  std::vector<SemiNormValue> out;
  for (std::size_t i = 1; i < sequence.size(); ++i)
    out.push_back(loc_seminorm(loc_sub(sequence[i], sequence[i - 1], a), a, p));
  return out;
}

}  // namespace loopalg
