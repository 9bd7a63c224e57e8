#pragma once

#include <string>

#include "planreal/world.hpp"

namespace planreal {

/// Parses and fully validates a scenario from JSON text.
/// Throws ScenarioError with the offending field on malformed input.
Scenario load_scenario(const std::string& text);

Scenario load_scenario_file(const std::string& path);

/// Serializes a scenario back to JSON (parse/serialize/parse round-trips).
std::string save_scenario(const Scenario& scenario);

}  // namespace planreal
