// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "loopalg/localized.hpp"
#include "loopalg/loopspace.hpp"
#include "loopalg/projector.hpp"
#include "loopalg/random.hpp"
#include "loopalg/seminorm.hpp"
#include "oracles.hpp"

using namespace loopalg;

namespace {

const Rational kEpsilon{1, 2};

struct Case {
  const char* f;
  int d;
};

const std::vector<Case> kHypersurfaces{{"x1", 1}, {"x1^2", 1}, {"x1*x2 + 1", 2}};

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

ModelSeries lift(const PolySeries& s) {
  return s.map_coefficients([](const Poly& c) { return LocalizedCoef(c); });
}

Result inversion_oracle() {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  int checked = 0;
  for (const auto& c : kHypersurfaces) {
    for (std::int64_t n = 1; n <= 2; ++n) {
      const Poly f = parse_poly(c.f, c.d);
      const PolySeries a = compose_ev(f, c.d, n, 8);
      const ModelSeries t = invert_series(a, n, f_min(f, c.d, n).lead);
      const ModelSeries product = lift(a) * t;
      const bool one = agree_on_joint_window(product, ModelSeries::constant(LocalizedCoef(Rational(1))));
      if (!one || product.cap() <= 0) {
        r.pass = false;
        r.detail += std::string(" mismatch f=") + c.f + " n=" + std::to_string(n);
      }
      ++checked;
    }
  }
  const double t = seconds_since(start);
  if (t >= 5) r.pass = false;
  r.detail = std::to_string(checked) + " (f, n) cases, runtime " + fmt_seconds(t) + " (limit 5s)" + r.detail;
  return r;
}

Result factoring_witness() {
  Result r;
  std::size_t generators = 0;
  for (const auto& c : kHypersurfaces) {
    for (std::int64_t n = 1; n <= 2; ++n) {
      const Poly f = parse_poly(c.f, c.d);
      const auto rels = complement_relations(f, c.d, n, 8);
      Exponent max_y = 0;
      for (const auto& rel : rels)
        for (const auto& [mono, q] : rel.generator.terms())
          for (const auto& [v, e] : mono.entries())
            if (v.family == Family::Inverse) max_y = std::max(max_y, v.index);
      const HypersurfaceModel model = build_hypersurface_model(f, c.d, n, max_y + 1);
      for (const auto& rel : rels) {
        ++generators;
        if (!substitute_inverse(rel.generator, model.inverse).is_zero()) {
          r.pass = false;
          r.detail += " survivor f=" + std::string(c.f) + " n=" + std::to_string(n) + " z^" +
                      std::to_string(rel.exponent);
        }
      }
    }
  }
  r.detail = std::to_string(generators) + " generators annihilated" + r.detail;
  return r;
}

Result good_elements() {
  Result r;
  const std::vector<std::int64_t> levels{0, 1, 2, 3, 4};
  std::size_t records = 0;
  for (const auto& c : kHypersurfaces) {
    const PolySeries a = compose_ev(parse_poly(c.f, c.d), c.d, 4, 1);
    const CheckReport report = check_good(a, levels, 5, kEpsilon);
    records += report.records.size();
    if (!report.all_passed() || report.records.size() != 25) {
      r.pass = false;
      r.detail += std::string(" failed f=") + c.f;
    }
  }
  const PolySeries x = ev_series(1, 4, 1)[0];
  for (const auto n : levels) {
    if (seminorm(x, SemiNormParams{kEpsilon, n}).value != pow(kEpsilon, -n)) {
      r.pass = false;
      r.detail += " |ev(x1)|_" + std::to_string(n) + " != eps^-" + std::to_string(n);
    }
  }
  r.detail = std::to_string(records) + " (level, power) records, |ev(x1)|_n = 2^n for n = 0..4" + r.detail;
  return r;
}

Result isometry() {
  Result r;
  const std::vector<std::int64_t> levels{0, 1, 2, 3, 4};
  std::size_t records = 0;
  for (const Case c : {Case{"x1", 1}, Case{"x1*x2 + 1", 2}}) {
    SampleRng rng(7);
    const Poly f = parse_poly(c.f, c.d);
    const auto pairs = random_isometry_pairs(rng, f, c.d, 4, 100);
    const CheckReport report = check_isometry(pairs, levels, kEpsilon, f, c.d);
    records += report.records.size();
    if (!report.all_passed()) {
      r.pass = false;
      r.detail += " " + std::to_string(report.failures()) + " failures for f=" + c.f;
    }
  }
  r.detail = std::to_string(records) + " (sample, level) comparisons, seed 7" + r.detail;
  return r;
}

Result projector_convergence() {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  std::size_t rows_checked = 0;
  for (Exponent j = -2; j <= 2; ++j) {
    for (std::int64_t level = 0; level <= 2; ++level) {
      ConvergenceSetup setup;
      setup.j = j;
      setup.level = level;
      setup.epsilon = kEpsilon;
      for (std::int64_t n = 0; n <= 8; ++n) setup.n_values.push_back(n);
      setup.cap = required_cap(setup);
      const auto rows = convergence_experiment(setup);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto n = rows[i].n;
        const SemiNormValue& dist = rows[i].distance;
        ++rows_checked;
        const bool oracle_ok = dist.exponent && *dist.exponent == testing::plain_distance_exponent(j, n, level);
        const bool tail_ok = n < std::max<std::int64_t>(level, std::abs(j)) + 1 || dist.value == pow(kEpsilon, n + 1);
        const bool monotone = i == 0 || dist.value <= rows[i - 1].distance.value;
        if (!oracle_ok || !tail_ok || !monotone || dist.is_upper_bound) {
          r.pass = false;
          r.detail += " j=" + std::to_string(j) + " N=" + std::to_string(level) + " n=" + std::to_string(n);
        }
      }
    }
  }
  const double t = seconds_since(start);
  if (t >= 10) r.pass = false;
  r.detail = std::to_string(rows_checked) + " rows, runtime " + fmt_seconds(t) + " (limit 10s)" + r.detail;
  return r;
}

bool only_coordinates(const PolySeries& s) {
  for (const auto& [m, c] : s.coeffs())
    for (const auto& [mono, q] : c.terms())
      for (const auto& [v, e] : mono.entries())
        if (v.family != Family::Coordinate) return false;
  return true;
}

Result density() {
  Result r;
  const Poly f = parse_poly("x1", 1);
  const Exponent cap = 9;
  const HypersurfaceModel model = build_hypersurface_model(f, 1, 1, cap);
  const LocalizedElem one_over_a{PolySeries::constant(Poly(1)), 1};
  const ModelSeries image = loc_to_model(one_over_a, model);
  std::string exps;
  for (std::int64_t n = 1; n <= 6; ++n) {
    const Approximation a = approximate_coefficient(f, 1, 1, n, 1, kEpsilon, cap);
    exps += (n > 1 ? "," : "") + (a.distance.exponent ? std::to_string(*a.distance.exponent) : "inf");
    if (a.distance.is_upper_bound || a.distance.value != pow(kEpsilon, n + 1)) {
      r.pass = false;
      r.detail += " distance n=" + std::to_string(n);
    }
    const NuPoly p = make_projector(1, n);
    if (!only_coordinates(a.element.num) || a.element.pow > static_cast<std::uint32_t>(p.degree()) + 1) {
      r.pass = false;
      r.detail += " not in the localisation n=" + std::to_string(n);
    }
    const ModelSeries lhs = loc_to_model(apply_nu_poly_localized(p, one_over_a, model.a), model);
    if (!agree_on_joint_window(lhs, apply_nu_poly(p, image))) {
      r.pass = false;
      r.detail += " commutation n=" + std::to_string(n);
    }
  }
  r.detail = "distance exponents " + exps + " for n = 1..6" + r.detail;
  return r;
}

Result ultrametric() {
  Result r;
  SampleRng rng(11);
  const auto pairs = random_series_pairs(rng, 2, 200);
  const std::vector<std::int64_t> levels{0, 1, 2, 3};
  const CheckReport report = check_ultrametric(pairs, levels, kEpsilon);
  std::size_t flagged = 0;
  for (const auto& rec : report.records) flagged += rec.upper_bound_involved ? 1 : 0;
  r.pass = report.all_passed() && report.records.size() == 200 * 4 * 2;
  r.detail = std::to_string(report.records.size()) + " comparisons, " + std::to_string(flagged) +
             " involve upper bounds, " + std::to_string(report.failures()) + " failures";
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Result determinism() {
  Result r;
  const std::vector<std::string> commands{
      "relations --f \"x1*x2 - 1\" --d 2 --n 1 --cap 2",
      "relations --complement --f \"x1^2\" --d 1 --n 2 --cap 1 --format csv",
      "ev --d 2 --n 1 --cap 2",
      "invert --f \"x1*x2 + 1\" --d 2 --n 1 --cap 5",
      "norm --f \"x1^2 + x1\" --levels 0,1,2,3",
      "converge plain --j 1 --level 2 --n-max 6",
      "converge complement --f x1 --j 1 --level 1 --n-max 3 --format json",
      "approx --f x1 --j 1 --n 2 --level 1",
      "check good --f \"x1*x2 + 1\" --d 2 --seed 3",
      "check isometry --f x1 --samples 40 --seed 7",
      "check ultrametric --d 2 --samples 60 --seed 5 --levels 0,1,2,3",
  };
  const auto dir = std::filesystem::temp_directory_path() / ("loopalg_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::size_t compared = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const auto file = dir / ("run" + std::to_string(i) + "_" + std::to_string(run));
      const std::string cmd =
          std::string("\"") + LOOPALG_CLI + "\" " + commands[i] + " --output \"" + file.string() + "\"";
      const int status = std::system(cmd.c_str());
      if (status != 0) {
        r.pass = false;
        r.detail += " [" + commands[i] + "] exited " + std::to_string(status);
      }
      outputs[run] = slurp(file);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) {
      r.pass = false;
      r.detail += " [" + commands[i] + "] differs";
    }
    ++compared;
  }
  std::filesystem::remove_all(dir);
  r.detail = std::to_string(compared) + " commands run twice, outputs byte-identical" + r.detail;
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"inversion oracle: f(x(z)) * inverse = 1 exactly", inversion_oracle},
      {"factoring witness: inverse coefficients kill complement relations", factoring_witness},
      {"good elements: |ev(f)^k|_n = |ev(f)|_n^k", good_elements},
      {"isometry: A-side and B-side semi-norms agree", isometry},
      {"projector convergence: distance eps^(n+1), non-increasing", projector_convergence},
      {"density: localized approximations reach y_1 z at rate eps^(n+1)", density},
      {"ultrametric and sub-multiplicative inequalities", ultrametric},
      {"determinism: repeated CLI runs are byte-identical", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("threw: ") + e.what();
    }
    failures += r.pass ? 0 : 1;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
              << r.detail << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
