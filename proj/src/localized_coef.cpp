#include "loopalg/localized_coef.hpp"

#include <algorithm>
#include <stdexcept>

#include "loopalg/errors.hpp"

namespace loopalg {
namespace {

LocalizedCoef::Unit merge_units(const LocalizedCoef::Unit& a, const LocalizedCoef::Unit& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (*a != *b) throw std::logic_error("mixing coefficients of different localisations");
  return a;
}

std::string wrapped(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

LocalizedCoef::LocalizedCoef(Poly num, std::uint32_t pow, Unit unit)
    : num_(std::move(num)), pow_(pow), unit_(std::move(unit)) {
  if (pow_ > 0 && (!unit_ || unit_->is_zero()))
    throw non_invertible_error("localised coefficient needs a nonzero unit");
  normalize();
}

void LocalizedCoef::normalize() {
  if (num_.is_zero()) {
    pow_ = 0;
    return;
  }
  while (pow_ > 0) {
    auto q = divide_exact(num_, *unit_);
    if (!q) break;
    num_ = std::move(*q);
    --pow_;
  }
}

LocalizedCoef operator+(const LocalizedCoef& a, const LocalizedCoef& b) {
  auto unit = merge_units(a.unit_, b.unit_);
  const std::uint32_t p = std::max(a.pow_, b.pow_);
  if (p == 0) return LocalizedCoef(a.num_ + b.num_, 0, unit);
  Poly num = a.num_ * pow(*unit, p - a.pow_) + b.num_ * pow(*unit, p - b.pow_);
  return LocalizedCoef(std::move(num), p, std::move(unit));
}

LocalizedCoef operator-(const LocalizedCoef& a) {
  LocalizedCoef r = a;
  r.num_ = -r.num_;
  return r;
}

LocalizedCoef operator-(const LocalizedCoef& a, const LocalizedCoef& b) { return a + (-b); }

LocalizedCoef operator*(const LocalizedCoef& a, const LocalizedCoef& b) {
  return LocalizedCoef(a.num_ * b.num_, a.pow_ + b.pow_, merge_units(a.unit_, b.unit_));
}

LocalizedCoef operator*(const LocalizedCoef& a, const Rational& q) {
  LocalizedCoef r = a;
  r.num_ *= q;
  if (r.num_.is_zero()) r.pow_ = 0;
  return r;
}

bool operator==(const LocalizedCoef& a, const LocalizedCoef& b) {
  if (a.pow_ == b.pow_) return a.num_ == b.num_;
  auto unit = merge_units(a.unit_, b.unit_);
  return a.num_ * pow(*unit, b.pow_) == b.num_ * pow(*unit, a.pow_);
}

std::string LocalizedCoef::to_string() const {
  if (pow_ == 0) return num_.to_string();
  std::string den = unit_->to_string();
  const bool bare_variable = unit_->size() == 1 && unit_->leading_term().second == 1 &&
                             unit_->leading_term().first.entries().size() == 1 &&
                             unit_->leading_term().first.entries().front().second == 1;
  if (!bare_variable) den = "(" + den + ")";
  if (pow_ > 1) den += "^" + std::to_string(pow_);
  return wrapped(num_.to_string()) + "/" + den;
}

bool vanishes_at_level(const LocalizedCoef& c, std::int64_t n) {
  if (c.pow() > 0 && vanishes_at_level(*c.unit(), n))
    throw non_invertible_error("localising unit " + c.unit()->to_string() + " vanishes at level " +
                               std::to_string(n));
  return vanishes_at_level(c.num(), n);
}

}  // namespace loopalg
