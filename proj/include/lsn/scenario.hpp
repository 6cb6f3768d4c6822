#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsn/search.hpp"

namespace lsn {

/// Everything one experiment needs, loaded from a JSON config file.
struct Scenario {
  ConstellationConfig constellation;
  TimeGrid grid;
  LinkBudget budget;
  VisibilityParams vis;
  std::vector<Cell> cells;
  std::vector<Demand> demands;
  Requirements requirements;
  int i_limit = 20;
  std::uint64_t seed = 0;
};

/// Command-line overrides applied while loading (the seed override lands
/// before demand generation).
struct ScenarioOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> num_slots;
  std::optional<int> i_limit;
};

/// Parses and validates a scenario config. Relative cell-file paths resolve
/// against the config file's directory. Throws on any malformed input.
Scenario load_scenario(const std::string& path, const ScenarioOverrides& overrides = {});

/// Serializes a search result to the machine-readable JSON document.
std::string search_result_json(const SearchResult& result);

}  // namespace lsn
