#include "lsn/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace lsn {

std::pair<int, int> balanced_shape(int n) {
  if (n < 1) throw std::invalid_argument("shape needs n >= 1");
  for (int o = static_cast<int>(std::sqrt(static_cast<double>(n))); o >= 1; --o) {
    if (n % o == 0) return {o, n / o};
  }
  return {1, n};
}

namespace {

ConstellationConfig with_shape(const ConstellationConfig& tmpl, int orbits, int per_orbit) {
  ConstellationConfig cfg = tmpl;
  cfg.num_orbits = orbits;
  cfg.sats_per_orbit = per_orbit;
  cfg.phasing = tmpl.phasing % (orbits * per_orbit);
  return cfg;
}

bool coverage_ok(const ConstellationConfig& cfg, const std::vector<Cell>& cells,
                 const std::vector<int>& needed, const TimeGrid& grid,
                 const VisibilityParams& vis) {
  for (int t = 0; t < grid.num_slots; ++t) {
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      if (needed[c] == 0) continue;
      int seen = 0;
      for (int o = 0; o < cfg.num_orbits && seen < needed[c]; ++o) {
        for (int m = 0; m < cfg.sats_per_orbit && seen < needed[c]; ++m) {
          if (gsl_visible(cells[c], {o, m}, t, cfg, grid, vis.min_elevation_deg)) ++seen;
        }
      }
      if (seen < needed[c]) return false;
    }
  }
  return true;
}

}  // namespace

SurvivableBound survivable_bound(const ConstellationConfig& tmpl,
                                 const std::vector<Cell>& cells,
                                 const Requirements& requirements, const TimeGrid& grid,
                                 const VisibilityParams& vis) {
  requirements.validate();
  std::vector<int> needed(cells.size(), 0);
  bool any = false;
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
    if (!cells[c].service_available) continue;
    needed[c] = requirements.max_r_for(c, static_cast<int>(cells.size()));
    any = any || needed[c] > 0;
  }
  if (!any) return {1, true};

  const int n_cap = tmpl.total_satellites();
  auto ok = [&](int n) {
    const auto [o, m] = balanced_shape(n);
    return coverage_ok(with_shape(tmpl, o, m), cells, needed, grid, vis);
  };
  if (!ok(n_cap)) return {n_cap, false};

  int lo = 1, hi = n_cap;  // hi always satisfies coverage
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return {hi, true};
}

ConstellationConfig shrink(const ConstellationConfig& config, int n_min) {
  const int current = config.total_satellites();
  if (current <= n_min || current <= 1)
    throw std::invalid_argument("shrink: constellation already at the lower bound");
  const int target = (current + n_min) / 2;

  int orbits = config.num_orbits;
  int per_orbit = config.sats_per_orbit;
  if (orbits <= per_orbit) {
    int reduce = (current - target) / orbits;
    if (reduce == 0) reduce = 1;  // minimal progress
    per_orbit = std::max(1, per_orbit - reduce);
    if (per_orbit == config.sats_per_orbit) per_orbit -= 1;
  } else {
    int reduce = (current - target) / per_orbit;
    if (reduce == 0) reduce = 1;
    orbits = std::max(1, orbits - reduce);
    if (orbits == config.num_orbits) orbits -= 1;
  }
  return with_shape(config, orbits, per_orbit);
}

ConstellationConfig expand(const ConstellationConfig& config, int n_max) {
  const int current = config.total_satellites();
  if (current >= n_max)
    throw std::invalid_argument("expand: constellation already at the upper bound");
  const int target = (current + n_max) / 2;

  int orbits = config.num_orbits;
  int per_orbit = config.sats_per_orbit;
  if (orbits <= per_orbit) {
    int add = (target - current) / per_orbit;
    if (add == 0) add = 1;
    orbits += add;
  } else {
    int add = (target - current) / orbits;
    if (add == 0) add = 1;
    per_orbit += add;
  }
  return with_shape(config, orbits, per_orbit);
}

SearchResult search(const ConstellationConfig& initial, const std::vector<Cell>& cells,
                    const std::vector<Demand>& demands, const Requirements& requirements,
                    const TimeGrid& grid, const LinkBudget& budget,
                    const VisibilityParams& vis, int i_limit) {
  if (i_limit < 1) throw std::invalid_argument("i_limit must be at least 1");
  initial.validate();

  SearchResult result;
  int n_min = survivable_bound(initial, cells, requirements, grid, vis).n_min;
  int n_max = initial.total_satellites();

  ConstellationConfig current = initial;
  std::set<std::pair<int, int>> visited;
  std::optional<ConstellationConfig> best;
  int best_n = 0;

  for (int iter = 0; iter < i_limit; ++iter) {
    const int n = current.total_satellites();
    if (!visited.emplace(current.num_orbits, current.sats_per_orbit).second) break;

    const FeasibilityReport report =
        feasibility_check(current, cells, demands, requirements, grid, budget, vis);
    result.trace.push_back(
        {iter, current.num_orbits, current.sats_per_orbit, n, report.feasible});
    result.iterations_used = iter + 1;

    if (report.feasible) {
      if (!best || n < best_n) {
        best = current;
        best_n = n;
      }
      n_max = std::min(n_max, n);
      if (n <= n_min) break;
      try {
        current = shrink(current, n_min);
      } catch (const std::invalid_argument&) {
        break;
      }
    } else {
      n_min = std::max(n_min, n);
      if (n_min >= n_max) break;
      try {
        current = expand(current, n_max);
      } catch (const std::invalid_argument&) {
        break;
      }
    }
  }

  result.best = best;
  result.best_n = best ? best_n : 0;
  return result;
}

}  // namespace lsn
