#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopalg/rational.hpp"

namespace loopalg {

enum class Family : std::uint8_t { Coordinate, Inverse };

// A polynomial variable: x^i_j (Coordinate), y_j (Inverse), or an ambient
// coordinate x^i of O(A^d) carrying no Laurent index yet.
struct VarRef {
  static constexpr std::int64_t kAmbient = std::numeric_limits<std::int64_t>::min();

  Family family = Family::Coordinate;
  int coordinate = 1;  // 0 for the Inverse family
  std::int64_t index = kAmbient;

  static VarRef x(int i, std::int64_t j) { return {Family::Coordinate, i, j}; }
  static VarRef ambient(int i) { return {Family::Coordinate, i, kAmbient}; }
  static VarRef y(std::int64_t j) { return {Family::Inverse, 0, j}; }

  bool is_ambient() const { return index == kAmbient; }

  std::string to_string() const;

  auto operator<=>(const VarRef&) const = default;
};

// Product of variables with positive exponents, entries sorted by VarRef.
class Monomial {
 public:
  using Entry = std::pair<VarRef, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarRef v, std::uint32_t e = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::uint64_t degree() const;

  bool divides(const Monomial& other) const;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Entry> entries_;
};

// Graded, then lexicographic with earlier VarRefs ranking higher.
// Used as "ranks strictly above", so ordered containers iterate from the
// leading monomial downwards.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial over the rationals; no zero coefficients are stored,
// so structural equality is mathematical equality.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(VarRef v) : Poly(Monomial(v)) {}
  explicit Poly(const Monomial& m, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the unit monomial.
  Rational constant_term() const;
  std::uint64_t degree() const;
  std::size_t size() const { return terms_.size(); }

  // Requires !is_zero().
  const std::pair<const Monomial, Rational>& leading_term() const { return *terms_.begin(); }

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator-(Poly p);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Canonical text, leading monomial first, e.g. "x1_-1^2 - x1_0^2".
  std::string to_string() const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

// π_n: substitutes 0 for every indexed variable with Laurent index < -n.
// Ambient variables are untouched.
Poly project(const Poly& p, std::int64_t n);

// True iff project(p, n) == 0.
bool vanishes_at_level(const Poly& p, std::int64_t n);

// q divides p exactly in Q[vars]: returns p / q, else nullopt.
// Requires q != 0.
std::optional<Poly> divide_exact(const Poly& p, const Poly& q);

// Raises p to a nonnegative power.
Poly pow(const Poly& p, std::uint32_t e);

// Hypersurface-input grammar: integer literals, x1..xd, + - * ^ and
// parentheses. Returns an ambient polynomial.
Poly parse_poly(std::string_view text, int d);

// Reads the canonical print form back: indexed variables x{i}_{j}, y_{j},
// and rational literals p/q in addition to the hypersurface grammar.
Poly parse_indexed_poly(std::string_view text);

// Largest ambient or indexed coordinate number occurring in p (0 if none).
int max_coordinate(const Poly& p);

}  // namespace loopalg
