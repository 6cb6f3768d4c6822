#pragma once

#include <optional>
#include <vector>

#include "lsn/feasibility.hpp"

namespace lsn {

struct SurvivableBound {
  int n_min = 1;
  // False when even the template-sized constellation misses the coverage
  // requirement; n_min then equals the template size.
  bool coverage_satisfied = true;
};

/// Coverage-only lower bound: the smallest N = O*M (balanced O ~ M shapes,
/// binary search on N) such that every service-available cell sees at least
/// max_j r_ij satellites in every slot.
SurvivableBound survivable_bound(const ConstellationConfig& tmpl,
                                 const std::vector<Cell>& cells,
                                 const Requirements& requirements, const TimeGrid& grid,
                                 const VisibilityParams& vis = {});

/// Factor pair (O, M) of n with the smallest |O - M|.
std::pair<int, int> balanced_shape(int n);

/// One binary-search step down: aim at the midpoint of [n_min, current N] and
/// remove whole orbits or whole satellites-per-orbit rows, whichever keeps O
/// and M closer. Always strictly reduces N; throws when already at or below
/// n_min.
ConstellationConfig shrink(const ConstellationConfig& config, int n_min);

/// One binary-search step up toward n_max, mirroring shrink. Always strictly
/// grows N; throws when already at or above n_max.
ConstellationConfig expand(const ConstellationConfig& config, int n_max);

struct TraceEntry {
  int iteration = 0;
  int orbits = 0;
  int sats_per_orbit = 0;
  int n = 0;
  bool feasible = false;
};

struct SearchResult {
  std::optional<ConstellationConfig> best;
  int best_n = 0;
  std::vector<TraceEntry> trace;
  int iterations_used = 0;
};

/// Requirement-driven minimum-satellite search: bracket [survivable bound,
/// initial N], feasibility check each candidate, shrink on success and expand
/// on failure, return the smallest feasible configuration seen.
SearchResult search(const ConstellationConfig& initial, const std::vector<Cell>& cells,
                    const std::vector<Demand>& demands, const Requirements& requirements,
                    const TimeGrid& grid, const LinkBudget& budget,
                    const VisibilityParams& vis = {}, int i_limit = 20);

}  // namespace lsn
