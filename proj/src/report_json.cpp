#include "harmconv/report_json.hpp"

namespace harmconv {

using nlohmann::json;

json complex_to_json(Cx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Cx complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json to_json(const GridSpec& grid) {
  return {{"radii", grid.radii}, {"angles_count", grid.angles_count}};
}

GridSpec grid_from_json(const json& j) {
  GridSpec grid;
  grid.radii = j.at("radii").get<std::vector<double>>();
  grid.angles_count = j.at("angles_count").get<int>();
  return grid;
}

json to_json(const UnivalencyReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations)
    violations.push_back({{"z", complex_to_json(v.z)}, {"modulus", v.modulus}});
  json critical = json::array();
  for (const Cx& z : report.critical_points) critical.push_back(complex_to_json(z));
  return {{"max_modulus", report.max_modulus},
          {"argmax", complex_to_json(report.argmax)},
          {"violations", std::move(violations)},
          {"grid", to_json(report.grid)},
          {"critical_points", std::move(critical)},
          {"skipped", report.skipped}};
}

UnivalencyReport report_from_json(const json& j) {
  UnivalencyReport r;
  r.max_modulus = j.at("max_modulus").get<double>();
  r.argmax = complex_from_json(j.at("argmax"));
  for (const json& v : j.at("violations"))
    r.violations.push_back({complex_from_json(v.at("z")), v.at("modulus").get<double>()});
  r.grid = grid_from_json(j.at("grid"));
  for (const json& z : j.at("critical_points")) r.critical_points.push_back(complex_from_json(z));
  r.skipped = j.at("skipped").get<std::size_t>();
  return r;
}

}  // namespace harmconv
