#pragma once

// Scenario JSON files.
//
//   {
//     "demand":    {"k": 4, "r": 3, "psi": 4},
//     "hierarchy": {"levels": ["DC", "rack", "server", "VM"]},      // optional
//     "classes": [
//       {"n_sub": 4, "epsilon": [4,1,1,1], "delta": 1, "reliabilities": [...]},
//       {"n_sub": 3, "preset": {"nr": 4, "delta": 1}, "reliabilities": [...]}
//     ],
//     "common_roots": [{"level": 1, "classes": [1, 2]}]             // optional
//   }
//
// Preset classes are expanded on load. Root class indices are 1-based.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sfcrel/model.hpp"

namespace sfcrel {

/// Unreadable file, malformed JSON or a field of the wrong shape. `field()` names the culprit.
class ScenarioFormatError : public std::runtime_error {
 public:
  ScenarioFormatError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class ScenarioReadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

inline const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ScenarioFormatError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioFormatError(path + "." + key, "missing required field");
  return *it;
}

inline int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ScenarioFormatError(path, "expected an integer");
  return v.get<int>();
}

inline double as_probability(const json& v, const std::string& path) {
  if (!v.is_number()) throw ScenarioFormatError(path, "expected a number");
  return v.get<double>();
}

inline std::vector<int> int_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ScenarioFormatError(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_int(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<double> probability_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ScenarioFormatError(path, "expected an array of probabilities");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_probability(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline Scenario scenario_from_json(const nlohmann::json& doc) {
  using detail::require;
  Scenario s;
  const auto& demand = require(doc, "demand", "scenario");
  s.demand.k = detail::as_int(require(demand, "k", "demand"), "demand.k");
  s.demand.r = detail::as_int(require(demand, "r", "demand"), "demand.r");
  s.demand.psi = detail::as_int(require(demand, "psi", "demand"), "demand.psi");

  if (auto it = doc.find("hierarchy"); it != doc.end()) {
    const auto& levels = require(*it, "levels", "hierarchy");
    if (!levels.is_array() || levels.empty())
      throw ScenarioFormatError("hierarchy.levels", "expected a non-empty array of names");
    s.hierarchy.level_names.clear();
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (!levels[i].is_string())
        throw ScenarioFormatError("hierarchy.levels[" + std::to_string(i) + "]",
                                  "expected a string");
      s.hierarchy.level_names.push_back(levels[i].get<std::string>());
    }
  }

  const auto& classes = require(doc, "classes", "scenario");
  if (!classes.is_array()) throw ScenarioFormatError("classes", "expected an array");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string path = "classes[" + std::to_string(i) + "]";
    const auto& entry = classes[i];
    const int n_sub = detail::as_int(require(entry, "n_sub", path), path + ".n_sub");
    auto reliabilities =
        detail::probability_array(require(entry, "reliabilities", path), path + ".reliabilities");
    if (auto preset = entry.find("preset"); preset != entry.end()) {
      PlacementPreset pp;
      pp.nr = detail::as_int(require(*preset, "nr", path + ".preset"), path + ".preset.nr");
      pp.delta =
          detail::as_int(require(*preset, "delta", path + ".preset"), path + ".preset.delta");
      try {
        s.classes.push_back(expand_preset(pp, n_sub, std::move(reliabilities), s.hierarchy));
      } catch (const std::invalid_argument& e) {
        throw ScenarioFormatError(path + ".preset", e.what());
      }
    } else {
      ReliabilityClassSpec spec;
      spec.n_sub = n_sub;
      spec.epsilon = detail::int_array(require(entry, "epsilon", path), path + ".epsilon");
      spec.delta = detail::as_int(require(entry, "delta", path), path + ".delta");
      spec.reliabilities = std::move(reliabilities);
      s.classes.push_back(std::move(spec));
    }
  }

  if (auto it = doc.find("common_roots"); it != doc.end()) {
    if (!it->is_array()) throw ScenarioFormatError("common_roots", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "common_roots[" + std::to_string(i) + "]";
      CommonRoot root;
      root.level = detail::as_int(require((*it)[i], "level", path), path + ".level");
      root.classes = detail::int_array(require((*it)[i], "classes", path), path + ".classes");
      s.common_roots.push_back(std::move(root));
    }
  }
  return s;
}

inline Scenario parse_scenario(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioFormatError("", std::string("malformed JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioReadError("cannot read scenario file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

/// Explicit form (presets already expanded).
inline nlohmann::json scenario_to_json(const Scenario& s) {
  nlohmann::json doc;
  doc["demand"] = {{"k", s.demand.k}, {"r", s.demand.r}, {"psi", s.demand.psi}};
  doc["hierarchy"] = {{"levels", s.hierarchy.level_names}};
  doc["classes"] = nlohmann::json::array();
  for (const auto& c : s.classes)
    doc["classes"].push_back({{"n_sub", c.n_sub},
                              {"epsilon", c.epsilon},
                              {"delta", c.delta},
                              {"reliabilities", c.reliabilities}});
  doc["common_roots"] = nlohmann::json::array();
  for (const auto& root : s.common_roots)
    doc["common_roots"].push_back({{"level", root.level}, {"classes", root.classes}});
  return doc;
}

}  // namespace sfcrel
