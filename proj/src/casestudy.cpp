#include "lsn/casestudy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lsn {

LaunchHistory load_launch_history(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open launch history: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("launch history is empty: " + path);

  LaunchHistory history;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string date, count_s;
    if (!std::getline(row, date, ',') || !std::getline(row, count_s))
      throw std::runtime_error("launch history line " + std::to_string(line_no) +
                               ": expected date,cumulative_satellites");
    while (!count_s.empty() && (count_s.back() == '\r' || count_s.back() == ' '))
      count_s.pop_back();
    LaunchEntry entry;
    entry.date = date;
    try {
      entry.cumulative_satellites = std::stoi(count_s);
    } catch (const std::exception&) {
      throw std::runtime_error("launch history line " + std::to_string(line_no) +
                               ": malformed satellite count");
    }
    if (entry.cumulative_satellites < 0)
      throw std::runtime_error("launch history line " + std::to_string(line_no) +
                               ": negative satellite count");
    if (!history.entries.empty() && entry.date <= history.entries.back().date)
      throw std::runtime_error("launch history line " + std::to_string(line_no) +
                               ": dates must be strictly increasing");
    history.entries.push_back(entry);
  }
  if (history.entries.empty()) throw std::runtime_error("launch history has no data rows");
  return history;
}

int max_survivability_for_count(int n, const CaseStudyScenario& scenario) {
  if (n < 1) return 0;
  const auto [orbits, per_orbit] = balanced_shape(n);
  ConstellationConfig initial = scenario.tmpl;
  initial.num_orbits = orbits;
  initial.sats_per_orbit = per_orbit;
  initial.phasing = scenario.tmpl.phasing % n;

  int achieved = 0;
  for (int r = 1; r <= scenario.max_r; ++r) {
    Requirements req = scenario.requirements;
    req.r_min = r;
    const SearchResult result = search(initial, scenario.cells, scenario.demands, req,
                                       scenario.grid, scenario.budget, scenario.vis,
                                       scenario.i_limit);
    if (!result.best) break;
    achieved = r;
  }
  return achieved;
}

std::vector<DeploymentPoint> deployment_curve(const LaunchHistory& history,
                                              const CaseStudyScenario& scenario) {
  if (history.entries.empty()) throw std::invalid_argument("empty launch history");
  std::map<int, int> cache;
  std::vector<DeploymentPoint> curve;
  for (const auto& entry : history.entries) {
    auto it = cache.find(entry.cumulative_satellites);
    if (it == cache.end()) {
      it = cache
               .emplace(entry.cumulative_satellites,
                        max_survivability_for_count(entry.cumulative_satellites, scenario))
               .first;
    }
    curve.push_back({entry.date, entry.cumulative_satellites, it->second});
  }
  return curve;
}

std::vector<DecayPoint> decay_projection(int n0, double aar, int years) {
  if (aar < 0.0 || aar >= 1.0) throw std::invalid_argument("aar must lie in [0, 1)");
  if (n0 < 0 || years < 0) throw std::invalid_argument("n0 and years must be non-negative");
  std::vector<DecayPoint> points;
  for (int k = 0; k <= years; ++k) {
    points.push_back(
        {k, static_cast<int>(std::llround(n0 * std::pow(1.0 - aar, k)))});
  }
  return points;
}

}  // namespace lsn
