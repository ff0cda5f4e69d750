#include "loopalg/poly.hpp"

#include <algorithm>
#include <cassert>

namespace loopalg {

std::string VarRef::to_string() const {
  if (family == Family::Inverse) return "y_" + std::to_string(index);
  std::string s = "x" + std::to_string(coordinate);
  if (!is_ambient()) s += "_" + std::to_string(index);
  return s;
}

Monomial::Monomial(VarRef v, std::uint32_t e) {
  if (e > 0) entries_.emplace_back(v, e);
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (it != other.entries_.end() && it->first < v) ++it;
    if (it == other.entries_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  assert(divides(other));
  Monomial q;
  auto mine = entries_.begin();
  for (const auto& [v, e] : other.entries_) {
    std::uint32_t remaining = e;
    if (mine != entries_.end() && mine->first == v) {
      remaining -= mine->second;
      ++mine;
    }
    if (remaining > 0) q.entries_.emplace_back(v, remaining);
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      m.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      m.entries_.push_back(*j++);
    } else {
      m.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

std::string Monomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : entries_) {
    if (!s.empty()) s += "*";
    s += v.to_string();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (ea[k].first != eb[k].first) return ea[k].first < eb[k].first;
    if (ea[k].second != eb[k].second) return ea[k].second > eb[k].second;
  }
  return false;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Poly::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  Poly r;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
  return r;
}

Poly& Poly::operator*=(const Poly& q) { return *this = *this * q; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coef] : terms_) coef *= c;
  }
  return *this;
}

Poly operator-(Poly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += loopalg::to_string(mag);
    } else if (mag == 1) {
      s += m.to_string();
    } else {
      s += loopalg::to_string(mag) + "*" + m.to_string();
    }
  }
  return s;
}

namespace {

bool killed_at_level(const Monomial& m, std::int64_t n) {
  return std::any_of(m.entries().begin(), m.entries().end(), [n](const auto& entry) {
    const VarRef& v = entry.first;
    return !v.is_ambient() && v.index < -n;
  });
}

}  // namespace

Poly project(const Poly& p, std::int64_t n) {
  Poly r;
  for (const auto& [m, c] : p.terms())
    if (!killed_at_level(m, n)) r.add_term(m, c);
  return r;
}

bool vanishes_at_level(const Poly& p, std::int64_t n) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [n](const auto& term) { return killed_at_level(term.first, n); });
}

std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
  assert(!q.is_zero());
  const auto& [lead_m, lead_c] = q.leading_term();
  Poly remainder = p;
  Poly quotient;
  // Single-divisor division algorithm: {q} is a Gröbner basis of (q), so the
  // remainder vanishes iff q | p.
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    if (!lead_m.divides(rm)) return std::nullopt;
    Poly step(lead_m.quotient_of(rm), rc / lead_c);
    quotient += step;
    remainder -= step * q;
  }
  return quotient;
}

Poly pow(const Poly& p, std::uint32_t e) {
  Poly result = 1;
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

int max_coordinate(const Poly& p) {
  int d = 0;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.entries())
      if (v.family == Family::Coordinate) d = std::max(d, v.coordinate);
  return d;
}

}  // namespace loopalg
