// loopalg command-line front end.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "loopalg/localized.hpp"
#include "loopalg/loopspace.hpp"
#include "loopalg/projector.hpp"
#include "loopalg/random.hpp"
#include "loopalg/report.hpp"
#include "loopalg/seminorm.hpp"

using namespace loopalg;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInput = 1, kPrecision = 2, kIo = 3, kProperty = 4 };

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat JSON object: every key names a long option of the main app.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}\n"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      input >> j;
    } catch (const json::exception& e) {
      throw input_error(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }
};

struct Settings {
  int d = 1;
  std::string f;
  std::int64_t n = 1;
  std::optional<Exponent> cap;
  std::string epsilon = "1/2";
  std::int64_t level = 1;
  std::vector<std::int64_t> levels{0, 1, 2, 3, 4};
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string output;
  std::string format;
  Exponent j = 0;
  std::int64_t n_max = 5;
  std::uint32_t max_power = 5;
  int coordinate = 1;
  bool complement = false;
  std::string mode = "plain";
  std::string suite;
};

Rational epsilon_of(const Settings& s) {
  const Rational e = parse_rational(s.epsilon);
  if (e <= 0 || e >= 1) throw input_error("--epsilon must lie strictly between 0 and 1, got " + s.epsilon);
  return e;
}

Poly hypersurface(const Settings& s) {
  if (s.d < 1) throw dimension_error("--d must be at least 1");
  if (s.f.empty()) throw input_error("--f is required");
  return parse_poly(s.f, s.d);
}

void check_level(std::int64_t n, const char* name) {
  if (n < 0) throw input_error(std::string(name) + " must be nonnegative");
}

std::string format_of(const Settings& s, const char* fallback) {
  const std::string f = s.format.empty() ? fallback : s.format;
  if (f != "json" && f != "csv") throw input_error("--format must be json or csv");
  return f;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json value_json(const SemiNormValue& v) {
  return {{"exponent", v.exponent ? json(*v.exponent) : json(nullptr)},
          {"value", value_text(v)},
          {"upper_bound", v.is_upper_bound}};
}

std::string csv_value_row(const std::string& head, const SemiNormValue& v) {
  return head + "," + (v.exponent ? std::to_string(*v.exponent) : "inf") + "," + value_text(v) + "," +
         (v.is_upper_bound ? "true" : "false") + "\n";
}

std::string cmd_relations(const Settings& s) {
  const Poly f = hypersurface(s);
  check_level(s.n, "--n");
  const Exponent cap = s.cap.value_or(1);
  const std::vector<Poly> fs{f};
  const auto rels = s.complement ? complement_relations(f, s.d, s.n, cap) : relations(fs, s.d, s.n, cap);
  if (format_of(s, "json") == "csv") {
    std::string out = "exponent,generator\n";
    for (const auto& r : rels) out += std::to_string(r.exponent) + "," + r.generator.to_string() + "\n";
    return out;
  }
  return dump({{"command", "relations"},
               {"f", f.to_string()},
               {"d", s.d},
               {"n", s.n},
               {"cap", cap},
               {"complement", s.complement},
               {"relations", to_json(rels)}});
}

std::string cmd_ev(const Settings& s) {
  check_level(s.n, "--n");
  const Exponent cap = s.cap.value_or(2);
  const auto xs = ev_series(s.d, s.n, cap);
  if (format_of(s, "json") == "csv") {
    std::string out = "coordinate,series\n";
    for (std::size_t i = 0; i < xs.size(); ++i) out += std::to_string(i + 1) + "," + xs[i].to_string() + "\n";
    return out;
  }
  json series = json::array();
  for (const auto& x : xs) series.push_back(x.to_string());
  return dump({{"command", "ev"}, {"d", s.d}, {"n", s.n}, {"cap", cap}, {"series", series}});
}

std::string cmd_invert(const Settings& s) {
  const Poly f = hypersurface(s);
  check_level(s.n, "--n");
  const Exponent cap = s.cap.value_or(4);
  const HypersurfaceModel model = build_hypersurface_model(f, s.d, s.n, cap);
  const ModelSeries inverse = model.inverse.is_exact() ? model.inverse : model.inverse.truncated(cap);
  if (format_of(s, "json") == "csv") {
    std::string out = "exponent,coefficient\n";
    for (const auto& [m, c] : inverse.coeffs()) out += std::to_string(m) + "," + c.to_string() + "\n";
    return out;
  }
  return dump({{"command", "invert"},
               {"f", f.to_string()},
               {"d", s.d},
               {"n", s.n},
               {"cap", cap},
               {"f_min", {{"m_low", model.fmin.m_low}, {"lead", model.fmin.lead.to_string()}}},
               {"inverse", inverse.to_string()}});
}

std::string cmd_norm(const Settings& s) {
  const Poly f = hypersurface(s);
  const Rational eps = epsilon_of(s);
  std::int64_t top = 0;
  for (const auto n : s.levels) {
    check_level(n, "--levels");
    top = std::max(top, n);
  }
  const Exponent cap = s.cap.value_or(1);
  const PolySeries a = compose_ev(f, s.d, top, cap);
  const bool csv = format_of(s, "json") == "csv";
  std::string out = "level,ord_exponent,value,upper_bound_flag\n";
  json rows = json::array();
  for (const auto n : s.levels) {
    const SemiNormValue v = seminorm(a, SemiNormParams{eps, n});
    out += csv_value_row(std::to_string(n), v);
    json row = value_json(v);
    row["level"] = n;
    rows.push_back(row);
  }
  if (csv) return out;
  return dump({{"command", "norm"}, {"f", f.to_string()}, {"d", s.d}, {"epsilon", to_string(eps)},
               {"series", a.to_string()}, {"values", rows}});
}

std::string cmd_converge(const Settings& s) {
  ConvergenceSetup setup;
  setup.d = s.d;
  setup.coordinate = s.coordinate;
  setup.j = s.j;
  setup.level = s.level;
  check_level(s.level, "--level");
  setup.epsilon = epsilon_of(s);
  if (s.mode == "complement") {
    setup.f = hypersurface(s);
  } else if (s.mode != "plain") {
    throw input_error("converge mode must be plain or complement");
  }
  if (s.n_max < 1) throw input_error("--n-max must be at least 1");
  for (std::int64_t n = 1; n <= s.n_max; ++n) setup.n_values.push_back(n);
  setup.cap = s.cap.value_or(required_cap(setup));
  const auto rows = convergence_experiment(setup);
  if (format_of(s, "csv") == "csv") return to_csv(rows);
  json out = json::array();
  for (const auto& r : rows) {
    json row = value_json(r.distance);
    row["n"] = r.n;
    out.push_back(row);
  }
  return dump({{"command", "converge"}, {"mode", s.mode}, {"j", s.j}, {"level", s.level}, {"rows", out}});
}

std::string cmd_approx(const Settings& s) {
  const Poly f = hypersurface(s);
  check_level(s.n, "--n");
  check_level(s.level, "--level");
  const Rational eps = epsilon_of(s);
  const Exponent cap = s.cap.value_or(std::max<Exponent>(s.n + 2, s.j + 1));
  const Approximation a = approximate_coefficient(f, s.d, s.j, s.n, s.level, eps, cap);
  if (format_of(s, "json") == "csv")
    return "n,ord_exponent,distance_as_rational,upper_bound_flag\n" + csv_value_row(std::to_string(s.n), a.distance);
  return dump({{"command", "approx"},
               {"f", f.to_string()},
               {"j", s.j},
               {"n", s.n},
               {"level", s.level},
               {"projector", make_projector(s.j, s.n).to_string()},
               {"element", a.element.to_string()},
               {"denominator_power", a.element.pow},
               {"image", a.image.to_string()},
               {"distance", value_json(a.distance)}});
}

struct CheckOutcome {
  std::string text;
  bool passed = false;
};

CheckOutcome cmd_check(const Settings& s) {
  const Rational eps = epsilon_of(s);
  std::int64_t top = 0;
  for (const auto n : s.levels) {
    check_level(n, "--levels");
    top = std::max(top, n);
  }
  CheckReport report;
  SampleRng rng(s.seed);
  if (s.suite == "good") {
    const Poly f = hypersurface(s);
    if (f.is_zero()) throw zero_polynomial_error("ev(0) = 0 is never a good element");
    report = check_good(compose_ev(f, s.d, top, s.cap.value_or(1)), s.levels, s.max_power, eps);
  } else if (s.suite == "isometry") {
    const Poly f = hypersurface(s);
    if (f.is_zero()) throw zero_polynomial_error("the complement of f = 0 is empty");
    const auto pairs = random_isometry_pairs(rng, f, s.d, top, s.samples);
    report = check_isometry(pairs, s.levels, eps, f, s.d);
  } else if (s.suite == "ultrametric") {
    if (s.d < 1) throw dimension_error("--d must be at least 1");
    const auto pairs = random_series_pairs(rng, s.d, s.samples);
    report = check_ultrametric(pairs, s.levels, eps);
  } else {
    throw input_error("check suite must be good, isometry or ultrametric");
  }
  CheckOutcome out;
  out.passed = report.all_passed();
  if (format_of(s, "json") == "csv") {
    std::string t = "check,sample,level,power,lhs_exponent,rhs_exponent,pass,upper_bound_involved\n";
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : report.records)
      t += r.check + "," + opt(r.sample) + "," + std::to_string(r.level) + "," + opt(r.power) + "," +
           opt(r.lhs_exponent) + "," + opt(r.rhs_exponent) + "," + (r.pass ? "true" : "false") + "," +
           (r.upper_bound_involved ? "true" : "false") + "\n";
    out.text = t;
  } else {
    out.text = dump({{"command", "check"},
                     {"suite", s.suite},
                     {"seed", s.seed},
                     {"epsilon", to_string(eps)},
                     {"passed", out.passed},
                     {"failures", report.failures()},
                     {"records", to_json(report)}});
  }
  return out;
}

void emit(const Settings& s, const std::string& text) {
  if (s.output.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw io_error("cannot write to standard output");
    return;
  }
  std::ofstream file(s.output, std::ios::binary);
  if (!file) throw io_error("cannot open " + s.output + " for writing");
  file << text;
  file.close();
  if (!file) throw io_error("failed writing " + s.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of loop spaces of affine varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file of option values; flags override it");

  Settings s;
  app.add_option("--d", s.d, "ambient dimension");
  app.add_option("--f", s.f, "polynomial in x1..xd");
  app.add_option("--n", s.n, "loop level");
  app.add_option("--cap", s.cap, "series are known modulo z^cap");
  app.add_option("--epsilon", s.epsilon, "semi-norm base p/q in (0,1)");
  app.add_option("--level", s.level, "semi-norm level N");
  app.add_option("--levels", s.levels, "semi-norm levels")->delimiter(',');
  app.add_option("--seed", s.seed, "random seed");
  app.add_option("--samples", s.samples, "number of random samples");
  app.add_option("--output", s.output, "output file (default stdout)");
  app.add_option("--format", s.format, "json or csv");
  app.add_option("--j", s.j, "target z-exponent");
  app.add_option("--n-max", s.n_max, "largest projector order");
  app.add_option("--max-power", s.max_power, "largest power in the good-element check");
  app.add_option("--coordinate", s.coordinate, "target coordinate for plain convergence");
  app.add_flag("--complement", s.complement, "relations of the complement of f = 0");

  auto* relations_cmd = app.add_subcommand("relations", "defining relations of the loop space");
  auto* ev_cmd = app.add_subcommand("ev", "universal Laurent series");
  auto* invert_cmd = app.add_subcommand("invert", "f_min and the inverse of f(x(z))");
  auto* norm_cmd = app.add_subcommand("norm", "semi-norms of f(x(z))");
  auto* converge_cmd = app.add_subcommand("converge", "projector convergence table");
  converge_cmd->add_option("mode", s.mode, "plain or complement");
  auto* approx_cmd = app.add_subcommand("approx", "localized approximation of an inverse coefficient");
  auto* check_cmd = app.add_subcommand("check", "property suites");
  check_cmd->add_option("suite", s.suite, "good, isometry or ultrametric")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    std::string text;
    bool property_failed = false;
    if (relations_cmd->parsed()) {
      text = cmd_relations(s);
    } else if (ev_cmd->parsed()) {
      text = cmd_ev(s);
    } else if (invert_cmd->parsed()) {
      text = cmd_invert(s);
    } else if (norm_cmd->parsed()) {
      text = cmd_norm(s);
    } else if (converge_cmd->parsed()) {
      text = cmd_converge(s);
    } else if (approx_cmd->parsed()) {
      text = cmd_approx(s);
    } else if (check_cmd->parsed()) {
      const CheckOutcome out = cmd_check(s);
      text = out.text;
      property_failed = !out.passed;
    }
    emit(s, text);
    if (property_failed) {
      std::cerr << "error: property check failed\n";
      return kProperty;
    }
    return kOk;
  } catch (const precision_exhausted& e) {
    std::cerr << "error: precision exhausted: " << e.what() << "\n";
    return kPrecision;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const good_element_violation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kProperty;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
