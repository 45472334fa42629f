#include "varcap/variety.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "varcap/poly_text.hpp"

namespace varcap {

using nlohmann::json;

VarietySpec parse_variety_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("variety file: ") + e.what());
  }
  VarietySpec v;
  try {
    v.label = j.value("label", std::string("variety"));
    v.n = j.at("n").get<int>();
    v.m = j.at("m").get<int>();
    v.radical_asserted = j.value("radical_asserted", false);
    for (const auto& s : j.at("generators")) v.generator_text.push_back(s.get<std::string>());
    if (j.contains("points_at_infinity"))
      for (const auto& s : j.at("points_at_infinity"))
        v.points_at_infinity_text.push_back(s.get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("variety file: ") + e.what());
  }
  if (v.n < 1) throw ConfigError("variety file: n must be >= 1");
  if (v.m < 1 || v.m > v.n) throw ConfigError("variety file: need 1 <= m <= n");
  for (const auto& s : v.generator_text) v.generators.push_back(parse_poly(s, v.n));
  return v;
}

VarietySpec load_variety(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("variety file: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_variety_json(ss.str());
}

std::string variety_to_json(const VarietySpec& v) {
  json j;
  j["label"] = v.label;
  j["n"] = v.n;
  j["m"] = v.m;
  j["radical_asserted"] = v.radical_asserted;
  j["generators"] = json::array();
  for (const auto& g : v.generators) j["generators"].push_back(format_poly(g));
  if (!v.points_at_infinity_text.empty()) j["points_at_infinity"] = v.points_at_infinity_text;
  return j.dump(2);
}

}  // namespace varcap
