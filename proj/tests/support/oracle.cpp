#include "support/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace lsn::test {

namespace {

// Enumerates every simple src->dst path of length <= hop_bound as an edge
// bitmask.
void enumerate_paths(const SimpleGraph& g, int src, int dst, int hop_bound,
                     std::vector<std::uint64_t>& out) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
    adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
  }
  std::vector<int> stack{src};
  std::vector<char> on_path(g.n, 0);
  on_path[src] = 1;

  std::uint64_t mask = 0;
  auto dfs = [&](auto&& self, int node) -> void {
    if (node == dst) {
      out.push_back(mask);
      return;
    }
    if (static_cast<int>(stack.size()) > hop_bound) return;
    for (const auto& [next, edge] : adj[node]) {
      if (on_path[next]) continue;
      on_path[next] = 1;
      stack.push_back(next);
      mask |= std::uint64_t{1} << edge;
      self(self, next);
      mask &= ~(std::uint64_t{1} << edge);
      stack.pop_back();
      on_path[next] = 0;
    }
  };
  if (src != dst) dfs(dfs, src);
}

int max_packing(const std::vector<std::uint64_t>& paths, std::size_t index,
                std::uint64_t used, int count, int best) {
  if (count > best) best = count;
  if (count + static_cast<int>(paths.size() - index) <= best) return best;
  for (std::size_t i = index; i < paths.size(); ++i) {
    if (paths[i] & used) continue;
    best = max_packing(paths, i + 1, used | paths[i], count + 1, best);
  }
  return best;
}

}  // namespace

int brute_force_disjoint(const SimpleGraph& graph, int src, int dst, int hop_bound,
                         const OracleGuard& guard) {
  if (graph.n > guard.max_nodes || static_cast<int>(graph.edges.size()) > guard.max_edges)
    throw std::invalid_argument("instance exceeds the oracle guard limits");
  if (src == dst) throw std::invalid_argument("oracle needs src != dst");
  std::vector<std::uint64_t> paths;
  enumerate_paths(graph, src, dst, hop_bound, paths);
  return max_packing(paths, 0, 0, 0, 0);
}

int brute_force_disjoint(const Snapshot& snapshot, int src, int dst, int hop_bound,
                         const OracleGuard& guard) {
  return brute_force_disjoint(to_graph(snapshot), src, dst, hop_bound, guard);
}

std::optional<ExhaustiveOptimum> exhaustive_min_constellation(
    const ConstellationConfig& tmpl, const std::vector<Cell>& cells,
    const std::vector<Demand>& demands, const Requirements& requirements,
    const TimeGrid& grid, const LinkBudget& budget, const VisibilityParams& vis, int n_cap,
    const OracleGuard& guard) {
  if (n_cap > guard.max_constellation_n)
    throw std::invalid_argument("n_cap exceeds the oracle guard limit");

  std::optional<ExhaustiveOptimum> best;
  for (int orbits = 1; orbits <= n_cap; ++orbits) {
    for (int per_orbit = 1; orbits * per_orbit <= n_cap; ++per_orbit) {
      ConstellationConfig cfg = tmpl;
      cfg.num_orbits = orbits;
      cfg.sats_per_orbit = per_orbit;
      cfg.phasing = tmpl.phasing % (orbits * per_orbit);
      if (!feasibility_check(cfg, cells, demands, requirements, grid, budget, vis).feasible)
        continue;
      const int n = orbits * per_orbit;
      const ExhaustiveOptimum candidate{orbits, per_orbit, n};
      if (!best || n < best->n ||
          (n == best->n && (std::abs(orbits - per_orbit) <
                                std::abs(best->orbits - best->sats_per_orbit) ||
                            (std::abs(orbits - per_orbit) ==
                                 std::abs(best->orbits - best->sats_per_orbit) &&
                             orbits < best->orbits)))) {
        best = candidate;
      }
    }
  }
  return best;
}

SimpleGraph random_graph(std::uint64_t seed, int max_nodes, int max_edges) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(4, max_nodes);
  const int n = n_dist(rng);

  std::set<std::pair<int, int>> chosen;
  // spanning chain keeps src/dst usually connected
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> prev(0, v - 1);
    const int u = prev(rng);
    chosen.emplace(std::min(u, v), std::max(u, v));
  }
  std::uniform_int_distribution<int> extra_dist(0, max_edges - n + 1);
  const int extra = extra_dist(rng);
  std::uniform_int_distribution<int> node(0, n - 1);
  for (int k = 0; k < extra; ++k) {
    const int a = node(rng);
    const int b = node(rng);
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
    if (static_cast<int>(chosen.size()) >= max_edges) break;
  }
  SimpleGraph g;
  g.n = n;
  g.edges.assign(chosen.begin(), chosen.end());
  return g;
}

}  // namespace lsn::test
