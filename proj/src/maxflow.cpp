#include "lsn/maxflow.hpp"

#include <deque>

namespace lsn {

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::deque<int> queue{source};
  level_[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int a = head_[u]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[u] + 1;
        queue.push_back(arcs_[a].to);
      }
    }
  }
  return level_[sink] >= 0;
}

int MaxFlow::push(int node, int sink, int limit) {
  if (node == sink) return limit;
  for (int& a = iter_[node]; a != -1; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    if (arc.capacity <= 0 || level_[arc.to] != level_[node] + 1) continue;
    const int sent = push(arc.to, sink, std::min(limit, arc.capacity));
    if (sent > 0) {
      arc.capacity -= sent;
      arcs_[a ^ 1].capacity += sent;
      return sent;
    }
  }
  return 0;
}

int MaxFlow::solve(int source, int sink) {
  int flow = 0;
  while (build_levels(source, sink)) {
    iter_ = head_;
    while (int sent = push(source, sink, std::numeric_limits<int>::max())) flow += sent;
  }
  return flow;
}

}  // namespace lsn
