#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gl2/engine_checks.hpp"
#include "gl2/gauge.hpp"
#include "gl2/monomial.hpp"
#include "gl2/report.hpp"
#include "gl2/rhobar.hpp"
#include "gl2/tame_type.hpp"

namespace gl2 {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const JSet& J);
Json to_json(const TameType& tau);
// Integral values as numbers, others as "n/d" strings.
Json to_json(const Rational& r);
Json to_json(const GaugeVector& g);
Json to_json(const WeightInterval& interval);
Json to_json(const CheckReport& report);
Json to_json(const FiltrationReport& report);
// Timings are included only when requested so that the rest stays byte-stable.
Json to_json(const SuiteOutcome& outcome, bool with_timing = true);

Weight weight_from_json(const Json& j);
JSet jset_from_json(const Json& j);
TameType type_from_json(const Json& j);
Rational rational_from_json(const Json& j);

// "n", "n/d" or "-n/d".
Rational parse_rational(const std::string& text);

}  // namespace gl2
