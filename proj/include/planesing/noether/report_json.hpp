#pragma once

#include "json.hpp"
#include "planesing/noether/noether.hpp"

namespace planesing {

nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const NoetherCertificate& c);
nlohmann::json to_json(const BezoutReport& r);

}  // namespace planesing
