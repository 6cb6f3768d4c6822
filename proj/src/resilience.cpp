#include "lsn/resilience.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace lsn {

void FailureScenario::validate() const {
  if (model == FailureModel::solar_storm) {
    if (storm_kill_count < 0) throw std::invalid_argument("storm kill count must be non-negative");
  } else {
    if (random_fail_prob < 0.0 || random_fail_prob > 1.0)
      throw std::invalid_argument("failure probability must lie in [0, 1]");
  }
}

Snapshot apply_failures(const Snapshot& snapshot, const FailureScenario& scenario) {
  scenario.validate();
  Snapshot damaged = snapshot;

  if (scenario.model == FailureModel::solar_storm) {
    if (scenario.storm_kill_count > snapshot.num_sats())
      throw std::invalid_argument("storm kill count exceeds satellite count");
    const int epicenter =
        snapshot.sat_node(scenario.storm_epicenter.orbit, scenario.storm_epicenter.slot);
    if (epicenter < 0 || epicenter >= snapshot.num_sats())
      throw std::invalid_argument("storm epicenter not in snapshot");
    const Vec3 center = snapshot.sat_positions[epicenter];
    std::vector<std::pair<double, int>> ranked;
    for (int s = 0; s < snapshot.num_sats(); ++s)
      ranked.emplace_back(distance(center, snapshot.sat_positions[s]), s);
    std::sort(ranked.begin(), ranked.end());
    for (int k = 0; k < scenario.storm_kill_count; ++k)
      damaged.sat_alive[ranked[k].second] = 0;
  } else {
    std::mt19937_64 rng(scenario.rng_seed);
    std::uniform_real_distribution<double> roll(0.0, 1.0);
    for (int s = 0; s < snapshot.num_sats(); ++s) {
      if (roll(rng) < scenario.random_fail_prob) damaged.sat_alive[s] = 0;
    }
  }
  return damaged;
}

double reachability_ratio(const Snapshot& damaged, const Snapshot& intact,
                          const std::vector<Demand>& demands, double lambda) {
  if (demands.empty()) throw std::invalid_argument("reachability needs at least one demand");
  if (lambda < 1.0) throw std::invalid_argument("lambda must be at least 1");

  int reachable = 0;
  for (const auto& d : demands) {
    const int src = intact.cell_node(d.src_cell);
    const int dst = intact.cell_node(d.dst_cell);
    const int lsp = shortest_hops(intact, src, dst);
    if (lsp == kUnreachable) continue;
    const int bound = static_cast<int>(std::ceil(lambda * lsp - 1e-9));
    const int hops = shortest_hops(damaged, src, dst);
    if (hops != kUnreachable && hops <= bound) ++reachable;
  }
  return static_cast<double>(reachable) / static_cast<double>(demands.size());
}

}  // namespace lsn
