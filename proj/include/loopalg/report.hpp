#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "loopalg/loopspace.hpp"
#include "loopalg/projector.hpp"
#include "loopalg/seminorm.hpp"

namespace loopalg {

// {level, power, lhs_exponent, rhs_exponent, pass, upper_bound_involved}
// plus the check name and sample index; absent values are null.
nlohmann::json to_json(const CheckRecord& r);
nlohmann::json to_json(const CheckReport& r);

// [{exponent, generator}] with canonical generator strings.
nlohmann::json to_json(const std::vector<Relation>& relations);

// Header "n,ord_exponent,distance_as_rational,upper_bound_flag"; a zero
// distance has ord_exponent "inf".
std::string to_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace loopalg
