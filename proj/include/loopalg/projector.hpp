#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopalg/localized.hpp"
#include "loopalg/loopspace.hpp"
#include "loopalg/seminorm.hpp"

namespace loopalg {

// A polynomial p(ν) in the Euler operator ν = z∂_z; ν acts on z^m as m.
class NuPoly {
 public:
  NuPoly() = default;
  // Ascending coefficients; trailing zeros are dropped.
  explicit NuPoly(std::vector<Rational> coefficients);

  static NuPoly constant(const Rational& c) { return NuPoly({c}); }
  static NuPoly nu() { return NuPoly({0, 1}); }
  // ν - root
  static NuPoly linear_factor(const Rational& root) { return NuPoly({-root, 1}); }

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  Rational operator()(const Rational& m) const;

  friend NuPoly operator*(const NuPoly& p, const NuPoly& q);
  friend NuPoly operator*(const NuPoly& p, const Rational& c);
  friend NuPoly operator+(const NuPoly& p, const NuPoly& q);
  friend bool operator==(const NuPoly&, const NuPoly&) = default;

  // e.g. "1 - nu^2"
  std::string to_string() const;

 private:
  std::vector<Rational> coefficients_;
};

// P^j_n = λ prod_{i in [-n,n], i != j} (ν - i), with λ fixing P(z^j) = z^j.
NuPoly make_projector(Exponent j, std::int64_t n);

// Diagonal action: the z^m coefficient is multiplied by p(m).
template <CoefficientRing C>
TruncSeries<C> apply_nu_poly(const NuPoly& p, const TruncSeries<C>& s) {
  return s.map_indexed([&p](Exponent m, const C& c) -> C { return c * p(Rational(m)); });
}

// p(z∂_z) u inside the localisation, by Horner's scheme over loc_derivative
// and multiplication by z. Denominator power grows by at most deg p.
LocalizedElem apply_nu_poly_localized(const NuPoly& p, const LocalizedElem& u, const PolySeries& a);

struct ConvergenceRow {
  std::int64_t n = 0;
  SemiNormValue distance;
};

struct ConvergenceSetup {
  int d = 1;
  int coordinate = 1;          // which x^i(z) is the plain target
  std::optional<Poly> f;       // set: complement target y(z)
  Exponent j = 0;
  std::vector<std::int64_t> n_values;
  std::int64_t level = 0;      // N, the semi-norm level
  Rational epsilon{1, 2};
  Exponent cap = 0;            // the target is known modulo z^cap
};

// Rows |P^j_n(target) - target_j z^j|_N for each n. The plain target is
// x^i(z); the complement target is y(z), i.e. the inverse of f(x(z)) in
// C_N((z)). Throws precision_exhausted (naming the needed cap) when a
// distance would only be an upper bound.
std::vector<ConvergenceRow> convergence_experiment(const ConvergenceSetup& setup);

// Smallest cap making every row of the setup exact.
Exponent required_cap(const ConvergenceSetup& setup);

struct Approximation {
  LocalizedElem element;  // P^j_n applied to 1/ev(f) inside A[ev(f)^{-1}]^alg
  ModelSeries image;      // its image in C_N((z))
  SemiNormValue distance;  // |image - y_j z^j|_N
};

Approximation approximate_coefficient(const Poly& f, int d, Exponent j, std::int64_t n, std::int64_t level,
                                      const Rational& epsilon, Exponent cap);

}  // namespace loopalg
