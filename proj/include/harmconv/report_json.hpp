#pragma once

// JSON shape of a scan report:
// {
//   "max_modulus": 1.06,
//   "argmax": {"re": 0.49, "im": 0.85},
//   "violations": [{"z": {"re": ..., "im": ...}, "modulus": ...}, ...],
//   "grid": {"radii": [...], "angles_count": 720},
//   "critical_points": [{"re": ..., "im": ...}, ...],
//   "skipped": 0
// }

#include <json.hpp>

#include "harmconv/analysis.hpp"

namespace harmconv {

nlohmann::json complex_to_json(Cx z);
Cx complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GridSpec& grid);
GridSpec grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UnivalencyReport& report);
// Throws nlohmann::json::exception on a shape mismatch.
UnivalencyReport report_from_json(const nlohmann::json& j);

}  // namespace harmconv
