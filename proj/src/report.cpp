#include "loopalg/report.hpp"

namespace loopalg {
namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const CheckRecord& r) {
  return {{"check", r.check},
          {"sample", optional_json(r.sample)},
          {"level", r.level},
          {"power", optional_json(r.power)},
          {"lhs_exponent", optional_json(r.lhs_exponent)},
          {"rhs_exponent", optional_json(r.rhs_exponent)},
          {"pass", r.pass},
          {"upper_bound_involved", r.upper_bound_involved}};
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rec : r.records) out.push_back(to_json(rec));
  return out;
}

nlohmann::json to_json(const std::vector<Relation>& relations) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rel : relations) out.push_back({{"exponent", rel.exponent}, {"generator", rel.generator.to_string()}});
  return out;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,ord_exponent,distance_as_rational,upper_bound_flag\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + ",";
    out += row.distance.exponent ? std::to_string(*row.distance.exponent) : "inf";
    out += "," + value_text(row.distance) + "," + (row.distance.is_upper_bound ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace loopalg
