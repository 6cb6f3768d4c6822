#pragma once

#include <cstdint>
#include <vector>

#include "lsn/feasibility.hpp"

namespace lsn {

enum class FailureModel { solar_storm, random_fail };

struct FailureScenario {
  FailureModel model = FailureModel::random_fail;
  SatelliteId storm_epicenter{};
  int storm_kill_count = 0;
  double random_fail_prob = 0.0;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// Returns a copy of the snapshot with failed satellites marked dead (all
/// incident edges drop out of the graph views). Solar storm removes the
/// kill-count satellites nearest the epicenter; random removes each satellite
/// independently with the given probability.
Snapshot apply_failures(const Snapshot& snapshot, const FailureScenario& scenario);

/// Fraction of demands that still have a path within ceil(lambda * L^sp) hops
/// in the damaged snapshot, where L^sp is the pre-failure shortest path taken
/// from the intact snapshot.
double reachability_ratio(const Snapshot& damaged, const Snapshot& intact,
                          const std::vector<Demand>& demands, double lambda);

}  // namespace lsn
