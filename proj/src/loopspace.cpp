#include "loopalg/loopspace.hpp"

#include <algorithm>
#include <memory>

namespace loopalg {
namespace {

void check_window(std::int64_t n, Exponent cap) {
  if (n < 0) throw std::invalid_argument("level must be nonnegative, got " + std::to_string(n));
  if (cap <= -n)
    throw std::invalid_argument("empty window: cap " + std::to_string(cap) + " must exceed -n = " +
                                std::to_string(-n));
}

PolySeries indexed_series(VarRef (*make)(int, std::int64_t), int i, std::int64_t n, Exponent cap) {
  PolySeries::Coefficients coeffs;
  for (Exponent j = -n; j < cap; ++j) coeffs.emplace(j, Poly(make(i, j)));
  return PolySeries(std::move(coeffs), -n, cap);
}

std::vector<Relation> nonzero_coefficients(const PolySeries& s) {
  std::vector<Relation> out;
  for (const auto& [m, c] : s.coeffs()) out.push_back({m, c});
  return out;
}

}  // namespace

std::vector<PolySeries> ev_series(int d, std::int64_t n, Exponent cap) {
  if (d < 1) throw dimension_error("dimension must be at least 1, got " + std::to_string(d));
  check_window(n, cap);
  std::vector<PolySeries> xs;
  xs.reserve(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) xs.push_back(indexed_series(&VarRef::x, i, n, cap));
  return xs;
}

PolySeries inverse_coordinate_series(std::int64_t n, Exponent cap) {
  check_window(n, cap);
  return indexed_series([](int, std::int64_t j) { return VarRef::y(j); }, 0, n, cap);
}

PolySeries compose_ev(const Poly& f, int d, std::int64_t n, Exponent cap) {
  if (max_coordinate(f) > d)
    throw dimension_error("polynomial " + f.to_string() + " uses coordinates beyond d = " + std::to_string(d));
  const auto degree = static_cast<std::int64_t>(f.degree());
  // A product of D series with floor -n and cap c is known modulo z^{c-(D-1)n}.
  const Exponent ev_cap = degree > 1 ? cap + (degree - 1) * n : cap;
  const auto xs = ev_series(d, n, std::max<Exponent>(ev_cap, -n + 1));
  return compose<Poly>(f, xs).truncated(cap);
}

std::vector<Relation> relations(std::span<const Poly> fs, int d, std::int64_t n, Exponent cap) {
  std::vector<Relation> out;
  for (const Poly& f : fs) {
    auto rel = nonzero_coefficients(compose_ev(f, d, n, cap));
    out.insert(out.end(), rel.begin(), rel.end());
  }
  return out;
}

std::vector<Relation> complement_relations(const Poly& f, int d, std::int64_t n, Exponent cap) {
  // y(z) * a is known modulo z^min(cap_y + floor_a, cap_a - n).
  const PolySeries a = compose_ev(f, d, n, cap + n);
  if (a.has_empty_window()) return {};
  const Exponent floor_a = a.is_exact() && a.coeffs().empty() ? 0 : a.floor();
  const PolySeries y = inverse_coordinate_series(n, std::max<Exponent>(cap - floor_a, -n + 1));
  const PolySeries product = (y * a).truncated(cap);
  return nonzero_coefficients(product - PolySeries::constant(Poly(1)));
}

FMin f_min(const Poly& f, int d, std::int64_t n) {
  if (f.is_zero()) throw zero_polynomial_error("f_min of the zero polynomial is undefined");
  const auto degree = static_cast<std::int64_t>(f.degree());
  // The top-degree part of f evaluated at the x_{-n} is nonzero, so the scan
  // stops at once; the loop only guards the bookkeeping.
  for (Exponent cap = -degree * n + 1;; ++cap) {
    const PolySeries a = compose_ev(f, d, n, cap);
    if (!a.coeffs().empty()) return {a.coeffs().begin()->first, a.coeffs().begin()->second};
    if (a.is_exact() || cap > -degree * n + 64)
      throw std::logic_error("no surviving coefficient in f(x(z)) for " + f.to_string());
  }
}

namespace {

ModelSeries invert_with_unit(const PolySeries& s, std::int64_t n, const Poly* designated,
                             std::optional<Exponent> max_cap) {
  const PolySeries p = s.map_coefficients([n](const Poly& c) { return project(c, n); }).tightened();
  if (p.coeffs().empty())
    throw non_invertible_error("no coefficient of the series survives projection to level " + std::to_string(n));
  const auto& [m, lead] = *p.coeffs().begin();

  LocalizedCoef lead_inverse;
  if (designated != nullptr && !designated->is_constant()) {
    auto ratio = divide_exact(lead, *designated);
    if (!ratio || !ratio->is_constant())
      throw non_invertible_error("leading coefficient " + lead.to_string() + " is not a unit multiple of " +
                                 designated->to_string());
    lead_inverse = LocalizedCoef::inverse_of(std::make_shared<const Poly>(*designated)) *
                   (1 / ratio->constant_term());
  } else if (lead.is_constant()) {
    lead_inverse = LocalizedCoef(Poly(Rational(1 / lead.constant_term())));
  } else {
    lead_inverse = LocalizedCoef::inverse_of(std::make_shared<const Poly>(lead));
  }

  Exponent cap;
  if (p.is_exact()) {
    if (p.coeffs().size() == 1) {
      cap = kExact;
    } else if (max_cap) {
      cap = *max_cap;
    } else {
      throw precision_exhausted("inverse of an exact non-monomial series needs an explicit cap");
    }
  } else {
    cap = p.cap() - 2 * m;
    if (max_cap) cap = std::min(cap, *max_cap);
  }

  ModelSeries::Coefficients t;
  t.emplace(-m, lead_inverse);
  if (cap < kExact) {
    for (Exponent k = 1; -m + k < cap; ++k) {
      LocalizedCoef acc;
      for (Exponent i = 1; i <= k; ++i) {
        auto si = p.coeffs().find(m + i);
        if (si == p.coeffs().end()) continue;
        auto tj = t.find(-m + k - i);
        if (tj == t.end()) continue;
        acc = acc + LocalizedCoef(si->second) * tj->second;
      }
      LocalizedCoef tk = -(lead_inverse * acc);
      if (!tk.is_zero()) t.emplace(-m + k, std::move(tk));
    }
  }
  return ModelSeries(std::move(t), -m, cap);
}

}  // namespace

ModelSeries invert_series(const PolySeries& s, std::int64_t n, std::optional<Exponent> max_cap) {
  return invert_with_unit(s, n, nullptr, max_cap);
}

ModelSeries invert_series(const PolySeries& s, std::int64_t n, const Poly& designated_unit,
                          std::optional<Exponent> max_cap) {
  if (designated_unit.is_zero()) throw non_invertible_error("designated unit is zero");
  return invert_with_unit(s, n, &designated_unit, max_cap);
}

LocalizedCoef substitute_inverse(const Poly& p, const ModelSeries& y) {
  std::map<std::pair<Exponent, std::uint32_t>, LocalizedCoef> cache;
  LocalizedCoef result;
  for (const auto& [m, c] : p.terms()) {
    Monomial x_part;
    LocalizedCoef y_part{Rational(c)};
    for (const auto& [v, e] : m.entries()) {
      if (v.family == Family::Coordinate) {
        x_part = x_part * Monomial(v, e);
        continue;
      }
      auto it = cache.find({v.index, e});
      if (it == cache.end()) {
        const LocalizedCoef yj = y.coeff(v.index);
        LocalizedCoef value = yj;
        for (std::uint32_t k = 1; k < e; ++k) value = value * yj;
        it = cache.emplace(std::pair{v.index, e}, std::move(value)).first;
      }
      y_part = y_part * it->second;
    }
    result = result + LocalizedCoef(Poly(x_part)) * y_part;
  }
  return result;
}

HypersurfaceModel build_hypersurface_model(const Poly& f, int d, std::int64_t n, Exponent inverse_cap) {
  HypersurfaceModel model;
  model.f = f;
  model.d = d;
  model.level = n;
  model.fmin = f_min(f, d, n);
  const Exponent m = model.fmin.m_low;
  if (f.is_constant()) {
    model.a = PolySeries::constant(f);
    model.inverse = invert_series(model.a, n);
    return model;
  }
  // The inverse of a series with leading exponent m, known modulo z^c, is
  // known modulo z^{c-2m}.
  const Exponent cap_a = std::max(inverse_cap + 2 * m, m + 1);
  model.a = compose_ev(f, d, n, cap_a);
  model.inverse = invert_series(model.a, n, model.fmin.lead);
  return model;
}

}  // namespace loopalg
