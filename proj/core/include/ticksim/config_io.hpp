#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ticksim/engine.hpp"

namespace ticksim {

// Tick-size grid and seeding plan of a sweep. Parsed from the same key-value
// format as a scenario, extended with dP_A_list, dP_B_list, seeds_per_cell
// and measurement_day.
struct SweepSpec {
  ScenarioConfig base;
  std::vector<double> dpa_list;  // percent of P_f
  std::vector<double> dpb_list;
  int64_t seeds_per_cell = 3;
  int64_t measurement_day = 500;

  void validate() const;

  // Fig.-13-style decade grid over 0.0001%..0.1% on both axes.
  static std::vector<double> default_grid();
};

// Scenario files are plain `key = value` lines with '#' comments. Keys are
// exactly the ScenarioConfig field names; unknown keys are rejected.
ScenarioConfig parse_scenario_file(const std::filesystem::path& path);
ScenarioConfig parse_scenario_text(const std::string& text, const std::string& origin);

SweepSpec parse_sweep_file(const std::filesystem::path& path);
SweepSpec parse_sweep_text(const std::string& text, const std::string& origin);

std::string scenario_to_text(const ScenarioConfig& config);

}  // namespace ticksim
