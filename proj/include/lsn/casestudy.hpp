#pragma once

#include <map>
#include <string>
#include <vector>

#include "lsn/search.hpp"

namespace lsn {

struct LaunchEntry {
  std::string date;  // ISO-8601 day
  int cumulative_satellites = 0;
};

struct LaunchHistory {
  std::vector<LaunchEntry> entries;
};

/// Launch-history CSV: header `date,cumulative_satellites`.
LaunchHistory load_launch_history(const std::string& path);

/// Everything a survivability-vs-count analysis needs besides the satellite
/// budget itself. The constellation template supplies inclination, altitude
/// and phasing.
struct CaseStudyScenario {
  ConstellationConfig tmpl;
  std::vector<Cell> cells;
  std::vector<Demand> demands;
  Requirements requirements;  // r_min is overwritten during the inverse sweep
  TimeGrid grid;
  LinkBudget budget;
  VisibilityParams vis;
  int i_limit = 20;
  int max_r = 16;
};

/// Largest r_min a budget of n satellites can support: runs the minimum-count
/// search with ascending r until it fails. Returns 0 when even r = 1 is out
/// of reach.
int max_survivability_for_count(int n, const CaseStudyScenario& scenario);

struct DeploymentPoint {
  std::string date;
  int satellites = 0;
  int r_min = 0;
};

/// Achievable survivability at each launch-history point; results are cached
/// by satellite count.
std::vector<DeploymentPoint> deployment_curve(const LaunchHistory& history,
                                              const CaseStudyScenario& scenario);

struct DecayPoint {
  int year = 0;
  int satellites = 0;
};

/// Projected constellation size under an annual decay rate:
/// N(k) = round(n0 * (1 - aar)^k).
std::vector<DecayPoint> decay_projection(int n0, double aar, int years);

}  // namespace lsn
