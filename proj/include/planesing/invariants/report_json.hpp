#pragma once

#include "json.hpp"
#include "planesing/invariants/invariants.hpp"

namespace planesing {

nlohmann::json to_json(const SingularityReport& r);
nlohmann::json to_json(const GenusReport& r);
nlohmann::json to_json(const AdjointReport& r);
nlohmann::json to_json(const IntersectionReport& r);

}  // namespace planesing
