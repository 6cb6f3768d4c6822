#pragma once

#include <cstdint>
#include <optional>

#include "lsn/feasibility.hpp"

namespace lsn::test {

/// Exact maximum edge-disjoint hop-bounded path count by full path-list
/// enumeration followed by a max-packing search. Independent of
/// exact_disjoint_paths so the two can cross-check each other.
int brute_force_disjoint(const SimpleGraph& graph, int src, int dst, int hop_bound,
                         const OracleGuard& guard = {});
int brute_force_disjoint(const Snapshot& snapshot, int src, int dst, int hop_bound,
                         const OracleGuard& guard = {});

struct ExhaustiveOptimum {
  int orbits = 0;
  int sats_per_orbit = 0;
  int n = 0;
};

/// Minimum-satellite feasible (O, M) by trying every shape with O*M <= n_cap.
/// Ties break toward balanced shapes, then fewer orbits.
std::optional<ExhaustiveOptimum> exhaustive_min_constellation(
    const ConstellationConfig& tmpl, const std::vector<Cell>& cells,
    const std::vector<Demand>& demands, const Requirements& requirements,
    const TimeGrid& grid, const LinkBudget& budget, const VisibilityParams& vis, int n_cap,
    const OracleGuard& guard = {});

/// Seeded random connected-ish undirected graph within the oracle guard.
SimpleGraph random_graph(std::uint64_t seed, int max_nodes = 10, int max_edges = 20);

}  // namespace lsn::test
