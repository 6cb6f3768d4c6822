#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lsn/demands.hpp"
#include "lsn/topology.hpp"

namespace lsn {

/// Plain undirected graph over [0, n); the flow and oracle routines work on
/// this so they apply to snapshots and synthetic test graphs alike.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

SimpleGraph to_graph(const Snapshot& snapshot);

/// Directed (L+1)-layer expansion of an undirected graph for one demand:
/// src alone in layer 1, every other node copied in layers 2..L, dst alone in
/// layer L+1. Edge arcs carry unit capacity; the dst self-advance arcs carry
/// ample capacity so paths shorter than L can share the ride to the sink. Any
/// src-to-sink flow therefore decomposes into hop-bounded paths.
struct LayeredGraph {
  int num_nodes = 0;
  int source = 0;
  int sink = 0;
  int hop_bound = 0;
  std::vector<std::pair<int, int>> arcs;          // unit capacity
  std::vector<std::pair<int, int>> advance_arcs;  // uncapacitated
};

LayeredGraph build_layered_graph(const SimpleGraph& graph, int src, int dst, int hop_bound);
LayeredGraph build_layered_graph(const Snapshot& snapshot, const Demand& demand, int hop_bound);

/// Integer max flow through the layered expansion alone.
int layered_max_flow(const LayeredGraph& lg);

/// Max flow of the original graph with every undirected edge at unit capacity
/// (classical edge-disjoint path count by Menger).
int classical_max_flow(const SimpleGraph& graph, int src, int dst);

/// Hop-bounded disjoint-path count used by the feasibility checker:
/// min(layered flow, classical flow). The layered flow alone may reuse one
/// original edge at different hop positions, so the classical flow caps it;
/// the result stays an upper bound on the strictly edge-disjoint count and
/// collapses to the classical value once hop_bound >= n - 1.
int max_disjoint_paths(const SimpleGraph& graph, int src, int dst, int hop_bound);

struct OracleGuard {
  int max_nodes = 14;
  int max_edges = 30;
  int max_constellation_n = 36;
};

/// Exact maximum number of mutually edge-disjoint paths of length <= hop_bound,
/// by backtracking over path sets. Refuses instances above the guard limits.
int exact_disjoint_paths(const SimpleGraph& graph, int src, int dst, int hop_bound,
                         const OracleGuard& guard = {});
int exact_disjoint_paths(const Snapshot& snapshot, int src, int dst, int hop_bound,
                         const OracleGuard& guard = {});

enum class FailureKind { none, survivability, uplink_capacity, downlink_capacity };

struct FeasibilityReport {
  bool feasible = true;
  int failing_slot = -1;
  int failing_demand = -1;
  FailureKind kind = FailureKind::none;
  int achieved_r = -1;
};

/// Checks every slot and demand: hop-bounded disjoint-path survivability with
/// L = ceil(lambda * per-slot shortest path), then the per-cell uplink and
/// downlink capacity ledgers. Demands are processed in input order.
FeasibilityReport feasibility_check(const ConstellationConfig& config,
                                    const std::vector<Cell>& cells,
                                    const std::vector<Demand>& demands,
                                    const Requirements& requirements, const TimeGrid& grid,
                                    const LinkBudget& budget, const VisibilityParams& vis = {});

}  // namespace lsn
