#include "lsn/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace lsn {

void LinkBudget::validate() const {
  if (isl_capacity_gbps <= 0.0 || gsl_capacity_gbps <= 0.0 || n_isl <= 0 ||
      sat_max_uplink_gbps <= 0.0 || sat_max_downlink_gbps <= 0.0)
    throw std::invalid_argument("link budget values must be positive");
}

std::vector<std::vector<int>> Snapshot::adjacency() const {
  std::vector<std::vector<int>> adj(num_nodes());
  for (const auto& [a, b] : edge_list()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<std::pair<int, int>> Snapshot::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(isl_edges.size() + gsl_edges.size());
  for (const auto& e : isl_edges) {
    if (sat_alive[e.sat_a] && sat_alive[e.sat_b]) edges.emplace_back(e.sat_a, e.sat_b);
  }
  for (const auto& e : gsl_edges) {
    if (sat_alive[e.sat]) edges.emplace_back(cell_node(e.cell), e.sat);
  }
  return edges;
}

Snapshot build_snapshot(const ConstellationConfig& config, const std::vector<Cell>& cells,
                        int t, const TimeGrid& grid, const LinkBudget& budget,
                        const VisibilityParams& vis) {
  config.validate();
  grid.validate();
  budget.validate();
  if (budget.n_isl != 4)
    throw std::invalid_argument("only the +Grid pattern (n_isl = 4) is supported");

  const int orbits = config.num_orbits;
  const int per_orbit = config.sats_per_orbit;

  Snapshot snap;
  snap.slot = t;
  snap.config = config;
  snap.cells = cells;
  snap.sat_alive.assign(config.total_satellites(), 1);
  snap.sat_positions.resize(config.total_satellites());
  for (int o = 0; o < orbits; ++o)
    for (int m = 0; m < per_orbit; ++m)
      snap.sat_positions[snap.sat_node(o, m)] = satellite_position(config, {o, m}, t, grid);

  // +Grid candidates, deduplicated for the wraparound cases O=2 / M=2.
  std::set<std::pair<int, int>> candidates;
  auto add_candidate = [&](SatelliteId a, SatelliteId b) {
    int ia = snap.sat_node(a.orbit, a.slot);
    int ib = snap.sat_node(b.orbit, b.slot);
    if (ia == ib) return;
    if (ia > ib) std::swap(ia, ib);
    candidates.emplace(ia, ib);
  };
  for (int o = 0; o < orbits; ++o) {
    for (int m = 0; m < per_orbit; ++m) {
      if (per_orbit >= 2) add_candidate({o, m}, {o, (m + 1) % per_orbit});
      if (orbits >= 2) add_candidate({o, m}, {(o + 1) % orbits, m});
    }
  }
  for (const auto& [ia, ib] : candidates) {
    SatelliteId a{ia / per_orbit, ia % per_orbit};
    SatelliteId b{ib / per_orbit, ib % per_orbit};
    if (isl_visible(a, b, t, config, grid, vis.min_los_altitude_km))
      snap.isl_edges.push_back({ia, ib, budget.isl_capacity_gbps});
  }

  // GSLs: per satellite, visible cells by ascending distance until the beam
  // capacity budget binds.
  std::vector<double> up_used(config.total_satellites(), 0.0);
  std::vector<double> down_used(config.total_satellites(), 0.0);
  for (int s = 0; s < config.total_satellites(); ++s) {
    const SatelliteId sid{s / per_orbit, s % per_orbit};
    std::vector<std::pair<double, int>> visible;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      if (!gsl_visible(cells[c], sid, t, config, grid, vis.min_elevation_deg)) continue;
      const double d = distance(cell_position(cells[c], t, grid), snap.sat_positions[s]);
      visible.emplace_back(d, c);
    }
    std::sort(visible.begin(), visible.end());
    for (const auto& [d, c] : visible) {
      if (up_used[s] + budget.gsl_capacity_gbps > budget.sat_max_uplink_gbps ||
          down_used[s] + budget.gsl_capacity_gbps > budget.sat_max_downlink_gbps)
        break;
      up_used[s] += budget.gsl_capacity_gbps;
      down_used[s] += budget.gsl_capacity_gbps;
      snap.gsl_edges.push_back({c, s, budget.gsl_capacity_gbps, budget.gsl_capacity_gbps});
    }
  }
  std::sort(snap.gsl_edges.begin(), snap.gsl_edges.end(),
            [](const GslEdge& a, const GslEdge& b) {
              return std::tie(a.cell, a.sat) < std::tie(b.cell, b.sat);
            });
  return snap;
}

int shortest_hops(const Snapshot& snapshot, int node_a, int node_b) {
  if (node_a < 0 || node_a >= snapshot.num_nodes() || node_b < 0 ||
      node_b >= snapshot.num_nodes())
    throw std::invalid_argument("node id out of range");
  if (node_a == node_b) return 0;
  const auto adj = snapshot.adjacency();
  std::vector<int> dist(snapshot.num_nodes(), kUnreachable);
  std::deque<int> queue{node_a};
  dist[node_a] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (dist[v] != kUnreachable) continue;
      dist[v] = dist[u] + 1;
      if (v == node_b) return dist[v];
      queue.push_back(v);
    }
  }
  return kUnreachable;
}

}  // namespace lsn
