#include "loopalg/projector.hpp"

#include <algorithm>

namespace loopalg {

NuPoly::NuPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational NuPoly::operator()(const Rational& m) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * m + *it;
  return acc;
}

NuPoly operator*(const NuPoly& p, const NuPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> out(p.coefficients_.size() + q.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coefficients_.size(); ++i)
    for (std::size_t k = 0; k < q.coefficients_.size(); ++k) out[i + k] += p.coefficients_[i] * q.coefficients_[k];
  return NuPoly(std::move(out));
}

NuPoly operator*(const NuPoly& p, const Rational& c) {
  std::vector<Rational> out = p.coefficients_;
  for (auto& x : out) x *= c;
  return NuPoly(std::move(out));
}

NuPoly operator+(const NuPoly& p, const NuPoly& q) {
  std::vector<Rational> out(std::max(p.coefficients_.size(), q.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < p.coefficients_.size(); ++i) out[i] += p.coefficients_[i];
  for (std::size_t i = 0; i < q.coefficients_.size(); ++i) out[i] += q.coefficients_[i];
  return NuPoly(std::move(out));
}

std::string NuPoly::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Rational& c = coefficients_[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string power = k == 0 ? "" : (k == 1 ? "nu" : "nu^" + std::to_string(k));
    if (power.empty()) {
      s += loopalg::to_string(mag);
    } else if (mag == 1) {
      s += power;
    } else {
      s += loopalg::to_string(mag) + "*" + power;
    }
  }
  return s;
}

NuPoly make_projector(Exponent j, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("projector order must be nonnegative");
  NuPoly p = NuPoly::constant(1);
  Rational lambda = 1;
  for (Exponent i = -n; i <= n; ++i) {
    if (i == j) continue;
    p = p * NuPoly::linear_factor(Rational(i));
    lambda /= Rational(j - i);
  }
  return p * lambda;
}

LocalizedElem apply_nu_poly_localized(const NuPoly& p, const LocalizedElem& u, const PolySeries& a) {
  if (p.is_zero()) return {};
  const auto& c = p.coefficients();
  LocalizedElem r = loc_scale(u, c.back());
  for (int k = p.degree() - 1; k >= 0; --k) {
    r = loc_shift(loc_derivative(r, a), 1);
    if (c[static_cast<std::size_t>(k)] != 0) r = loc_add(r, loc_scale(u, c[static_cast<std::size_t>(k)]), a);
  }
  return r;
}

Exponent required_cap(const ConvergenceSetup& setup) {
  Exponent need = setup.j + 1;
  for (const auto n : setup.n_values) need = std::max<Exponent>(need, n + 2);
  return need;
}

namespace {

template <CoefficientRing C>
SemiNormValue projector_distance(const TruncSeries<C>& target, const C& target_j, Exponent j, std::int64_t n,
                                 const SemiNormParams& params) {
  const TruncSeries<C> diff =
      apply_nu_poly(make_projector(j, n), target) - TruncSeries<C>::monomial(target_j, j);
  return seminorm(diff, params);
}

}  // namespace

std::vector<ConvergenceRow> convergence_experiment(const ConvergenceSetup& setup) {
  const SemiNormParams params{setup.epsilon, setup.level};
  params.validate();
  const Exponent need = required_cap(setup);
  if (setup.cap < need)
    throw precision_exhausted("convergence table needs cap >= " + std::to_string(need) + ", got " +
                              std::to_string(setup.cap));
  std::int64_t max_n = 0;
  for (const auto n : setup.n_values) max_n = std::max(max_n, n);

  std::vector<ConvergenceRow> rows;
  auto record = [&](std::int64_t n, SemiNormValue distance) {
    if (distance.is_upper_bound)
      throw precision_exhausted("distance for n = " + std::to_string(n) + " is only bounded by epsilon^" +
                                std::to_string(*distance.exponent) + "; rerun with cap >= " +
                                std::to_string(*distance.exponent + 1));
    rows.push_back({n, std::move(distance)});
  };

  if (!setup.f) {
    if (setup.coordinate < 1 || setup.coordinate > setup.d)
      throw dimension_error("target coordinate " + std::to_string(setup.coordinate) + " outside 1.." +
                            std::to_string(setup.d));
    // Start below everything π_N keeps so the projection does real work.
    const std::int64_t floor_level = std::max(setup.level, max_n) + 1;
    const PolySeries target = ev_series(setup.d, floor_level, setup.cap)[setup.coordinate - 1];
    const Poly target_j(VarRef::x(setup.coordinate, setup.j));
    for (const auto n : setup.n_values) record(n, projector_distance(target, target_j, setup.j, n, params));
  } else {
    const HypersurfaceModel model = build_hypersurface_model(*setup.f, setup.d, setup.level, setup.cap);
    const ModelSeries target = model.inverse.truncated(setup.cap);
    const LocalizedCoef target_j = target.coeff(setup.j);
    for (const auto n : setup.n_values) record(n, projector_distance(target, target_j, setup.j, n, params));
  }
  return rows;
}

Approximation approximate_coefficient(const Poly& f, int d, Exponent j, std::int64_t n, std::int64_t level,
                                      const Rational& epsilon, Exponent cap) {
  const SemiNormParams params{epsilon, level};
  params.validate();
  if (cap < std::max<Exponent>(n + 2, j + 1))
    throw precision_exhausted("approximation needs cap >= " + std::to_string(std::max<Exponent>(n + 2, j + 1)) +
                              ", got " + std::to_string(cap));
  const HypersurfaceModel model = build_hypersurface_model(f, d, level, cap);
  const SemiNormValue norm_a = seminorm(model.a, params);
  if (norm_a.is_zero() || norm_a.is_upper_bound)
    throw good_element_violation("ev(f) has no usable semi-norm at level " + std::to_string(level));

  const LocalizedElem one_over_a = normalize({PolySeries::constant(Poly(1)), 1}, model.a);
  Approximation out;
  out.element = apply_nu_poly_localized(make_projector(j, n), one_over_a, model.a);
  out.image = loc_to_model(out.element, model);
  const ModelSeries target = ModelSeries::monomial(model.inverse.coeff(j), j);
  out.distance = seminorm(out.image - target, params);
  if (out.distance.is_upper_bound)
    throw precision_exhausted("approximation distance for n = " + std::to_string(n) +
                              " is only an upper bound; rerun with cap >= " + std::to_string(*out.distance.exponent + 1));
  return out;
}

}  // namespace loopalg
