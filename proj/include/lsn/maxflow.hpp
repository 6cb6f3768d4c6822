#pragma once

#include <limits>
#include <vector>

namespace lsn {

/// Dinic max-flow over integer capacities. Unit-capacity graphs run in the
/// O(E*sqrt(V)) regime.
class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes) : head_(num_nodes, -1) {}

  void add_arc(int from, int to, int capacity) {
    arcs_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int solve(int source, int sink);

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
  };

  bool build_levels(int source, int sink);
  int push(int node, int sink, int limit);

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace lsn
