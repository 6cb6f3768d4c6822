#pragma once

#include <utility>
#include <vector>

#include "lsn/orbits.hpp"

namespace lsn {

struct LinkBudget {
  double isl_capacity_gbps = 20.0;
  double gsl_capacity_gbps = 4.0;
  int n_isl = 4;
  double sat_max_uplink_gbps = 20.0;
  double sat_max_downlink_gbps = 20.0;

  void validate() const;
};

struct IslEdge {
  int sat_a = 0;  // linear satellite id, a < b
  int sat_b = 0;
  double capacity_gbps = 0.0;
};

struct GslEdge {
  int cell = 0;
  int sat = 0;
  double uplink_gbps = 0.0;    // cell -> satellite
  double downlink_gbps = 0.0;  // satellite -> cell
};

/// One time slot's network graph. Node ids: satellites occupy [0, N) in
/// orbit-major order, cells occupy [N, N + C).
struct Snapshot {
  int slot = 0;
  ConstellationConfig config;
  std::vector<Cell> cells;
  std::vector<Vec3> sat_positions;
  std::vector<char> sat_alive;  // failure injection marks satellites dead
  std::vector<IslEdge> isl_edges;
  std::vector<GslEdge> gsl_edges;

  int num_sats() const { return config.total_satellites(); }
  int num_nodes() const { return num_sats() + static_cast<int>(cells.size()); }
  int sat_node(int orbit, int slot_index) const {
    return orbit * config.sats_per_orbit + slot_index;
  }
  int cell_node(int cell_index) const { return num_sats() + cell_index; }

  std::vector<std::vector<int>> adjacency() const;
  /// All live edges as an undirected (node, node) list over the unified id space.
  std::vector<std::pair<int, int>> edge_list() const;
};

/// Builds the +Grid snapshot for slot t: in-orbit neighbors plus same-slot
/// satellites in the two adjacent orbits, each admitted only when line-of-sight
/// holds; GSLs for every visible (cell, satellite) pair, nearest cells first
/// until the per-satellite beam budget binds.
Snapshot build_snapshot(const ConstellationConfig& config, const std::vector<Cell>& cells,
                        int t, const TimeGrid& grid, const LinkBudget& budget,
                        const VisibilityParams& vis = {});

inline constexpr int kUnreachable = -1;

/// Minimum hop count between two nodes, or kUnreachable.
int shortest_hops(const Snapshot& snapshot, int node_a, int node_b);

}  // namespace lsn
