#include "lsn/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "lsn/maxflow.hpp"

namespace lsn {

SimpleGraph to_graph(const Snapshot& snapshot) {
  return {snapshot.num_nodes(), snapshot.edge_list()};
}

LayeredGraph build_layered_graph(const SimpleGraph& graph, int src, int dst, int hop_bound) {
  if (src == dst) throw std::invalid_argument("layered graph needs src != dst");
  if (src < 0 || src >= graph.n || dst < 0 || dst >= graph.n)
    throw std::invalid_argument("layered graph endpoint out of range");
  if (hop_bound < 1) throw std::invalid_argument("hop bound must be at least 1");

  const int n = graph.n;
  const int L = hop_bound;
  // Layer 1 holds src only; layers 2..L hold every node but src; layer L+1
  // holds dst only.
  LayeredGraph lg;
  lg.hop_bound = L;
  lg.source = 0;
  lg.num_nodes = 2 + (L - 1) * (n - 1);
  lg.sink = lg.num_nodes - 1;

  auto mid_index = [&](int node, int layer) {
    // layer in [2, L], node != src
    const int rank = node < src ? node : node - 1;
    return 1 + (layer - 2) * (n - 1) + rank;
  };
  auto tail_index = [&](int node, int layer) -> int {
    if (layer == 1) return node == src ? 0 : -1;
    return node == src ? -1 : mid_index(node, layer);
  };
  auto head_index = [&](int node, int layer) -> int {
    if (layer == L + 1) return node == dst ? lg.sink : -1;
    return node == src ? -1 : mid_index(node, layer);
  };

  for (int layer = 1; layer <= L; ++layer) {
    for (const auto& [a, b] : graph.edges) {
      for (const auto& [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
        const int tail = tail_index(i, layer);
        const int head = head_index(j, layer + 1);
        if (tail >= 0 && head >= 0) lg.arcs.emplace_back(tail, head);
      }
    }
    if (layer >= 2) {
      const int tail = tail_index(dst, layer);
      const int head = head_index(dst, layer + 1);
      if (tail >= 0 && head >= 0) lg.advance_arcs.emplace_back(tail, head);
    }
  }
  return lg;
}

LayeredGraph build_layered_graph(const Snapshot& snapshot, const Demand& demand,
                                 int hop_bound) {
  return build_layered_graph(to_graph(snapshot), snapshot.cell_node(demand.src_cell),
                             snapshot.cell_node(demand.dst_cell), hop_bound);
}

int layered_max_flow(const LayeredGraph& lg) {
  MaxFlow flow(lg.num_nodes);
  for (const auto& [from, to] : lg.arcs) flow.add_arc(from, to, 1);
  const int ample = static_cast<int>(lg.arcs.size()) + 1;
  for (const auto& [from, to] : lg.advance_arcs) flow.add_arc(from, to, ample);
  return flow.solve(lg.source, lg.sink);
}

int classical_max_flow(const SimpleGraph& graph, int src, int dst) {
  MaxFlow flow(graph.n);
  for (const auto& [a, b] : graph.edges) {
    flow.add_arc(a, b, 1);
    flow.add_arc(b, a, 1);
  }
  return flow.solve(src, dst);
}

int max_disjoint_paths(const SimpleGraph& graph, int src, int dst, int hop_bound) {
  const int classical = classical_max_flow(graph, src, dst);
  if (classical == 0) return 0;
  const int layered = layered_max_flow(build_layered_graph(graph, src, dst, hop_bound));
  return std::min(layered, classical);
}

namespace {

// Backtracking state for the exact edge-disjoint path-set search. Paths in a
// chosen set are kept in lexicographic node-sequence order so each set is
// visited once.
struct ExactSearch {
  const SimpleGraph& graph;
  int src;
  int dst;
  int hop_bound;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge id)
  std::uint64_t used = 0;
  std::vector<int> prev_path;
  std::vector<int> cur_path;
  std::uint64_t cur_mask = 0;
  int best = 0;

  explicit ExactSearch(const SimpleGraph& g, int s, int d, int L)
      : graph(g), src(s), dst(d), hop_bound(L), adj(g.n) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
      adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
  }

  int free_flow_bound() const {
    MaxFlow flow(graph.n);
    for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
      if (used >> e & 1) continue;
      flow.add_arc(graph.edges[e].first, graph.edges[e].second, 1);
      flow.add_arc(graph.edges[e].second, graph.edges[e].first, 1);
    }
    return flow.solve(src, dst);
  }

  void choose_next_path(int count) {
    best = std::max(best, count);
    if (count + free_flow_bound() <= best) return;
    cur_path.assign(1, src);
    cur_mask = 0;
    extend(count, /*tight=*/!prev_path.empty());
  }

  void extend(int count, bool tight) {
    const int node = cur_path.back();
    if (node == dst && cur_path.size() > 1) {
      const auto saved_prev = prev_path;
      const auto saved_path = cur_path;
      const auto saved_mask = cur_mask;
      used |= cur_mask;
      prev_path = cur_path;
      choose_next_path(count + 1);
      used &= ~saved_mask;
      prev_path = saved_prev;
      cur_path = saved_path;
      cur_mask = saved_mask;
      return;
    }
    if (static_cast<int>(cur_path.size()) > hop_bound) return;
    const std::size_t depth = cur_path.size();
    const int lower = tight && depth < prev_path.size() ? prev_path[depth] : -1;
    for (const auto& [next, edge] : adj[node]) {
      if (next < lower) continue;
      if (used >> edge & 1 || cur_mask >> edge & 1) continue;
      if (std::find(cur_path.begin(), cur_path.end(), next) != cur_path.end()) continue;
      cur_path.push_back(next);
      cur_mask |= std::uint64_t{1} << edge;
      extend(count, tight && next == lower);
      cur_mask &= ~(std::uint64_t{1} << edge);
      cur_path.pop_back();
    }
  }
};

}  // namespace

int exact_disjoint_paths(const SimpleGraph& graph, int src, int dst, int hop_bound,
                         const OracleGuard& guard) {
  if (graph.n > guard.max_nodes || static_cast<int>(graph.edges.size()) > guard.max_edges)
    throw std::invalid_argument("instance exceeds the exact-oracle guard limits");
  if (src == dst) throw std::invalid_argument("exact oracle needs src != dst");
  if (hop_bound < 1) return 0;
  ExactSearch search(graph, src, dst, hop_bound);
  search.choose_next_path(0);
  return search.best;
}

int exact_disjoint_paths(const Snapshot& snapshot, int src, int dst, int hop_bound,
                         const OracleGuard& guard) {
  return exact_disjoint_paths(to_graph(snapshot), src, dst, hop_bound, guard);
}

FeasibilityReport feasibility_check(const ConstellationConfig& config,
                                    const std::vector<Cell>& cells,
                                    const std::vector<Demand>& demands,
                                    const Requirements& requirements, const TimeGrid& grid,
                                    const LinkBudget& budget, const VisibilityParams& vis) {
  requirements.validate();
  for (const auto& d : demands) {
    if (d.src_cell == d.dst_cell) throw std::invalid_argument("demand src == dst");
    if (d.src_cell < 0 || d.src_cell >= static_cast<int>(cells.size()) || d.dst_cell < 0 ||
        d.dst_cell >= static_cast<int>(cells.size()))
      throw std::invalid_argument("demand cell index out of range");
    if (d.size_gbps <= 0.0) throw std::invalid_argument("demand size must be positive");
  }

  for (int t = 0; t < grid.num_slots; ++t) {
    const Snapshot snap = build_snapshot(config, cells, t, grid, budget, vis);
    const SimpleGraph graph = to_graph(snap);

    std::vector<double> avail_up(cells.size(), 0.0);
    std::vector<double> avail_down(cells.size(), 0.0);
    for (const auto& e : snap.gsl_edges) {
      avail_up[e.cell] += e.uplink_gbps;
      avail_down[e.cell] += e.downlink_gbps;
    }

    for (int di = 0; di < static_cast<int>(demands.size()); ++di) {
      const Demand& d = demands[di];
      const int src = snap.cell_node(d.src_cell);
      const int dst = snap.cell_node(d.dst_cell);
      const int r = requirements.r_for(d.src_cell, d.dst_cell);

      const int lsp = shortest_hops(snap, src, dst);
      if (lsp == kUnreachable) {
        if (r >= 1) return {false, t, di, FailureKind::survivability, 0};
      } else if (r >= 1) {
        const int hop_bound =
            static_cast<int>(std::ceil(requirements.lambda * lsp - 1e-9));
        const int achieved = max_disjoint_paths(graph, src, dst, hop_bound);
        if (achieved < r) return {false, t, di, FailureKind::survivability, achieved};
      }

      if (d.size_gbps > avail_up[d.src_cell] + 1e-9)
        return {false, t, di, FailureKind::uplink_capacity, -1};
      if (d.size_gbps > avail_down[d.dst_cell] + 1e-9)
        return {false, t, di, FailureKind::downlink_capacity, -1};
      avail_up[d.src_cell] -= d.size_gbps;
      avail_down[d.dst_cell] -= d.size_gbps;
    }
  }
  return {};
}

}  // namespace lsn
