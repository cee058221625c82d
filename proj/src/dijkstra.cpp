#include "hubloc/dijkstra.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <utility>

namespace hubloc {

namespace {

using QueueEntry = std::pair<double, std::uint32_t>;
using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

// Runs until the queue is empty or `remaining` distinct targets are settled.
void run(const RoadGraph& graph, NodeRef source, SearchDirection direction,
         std::vector<double>& dist, std::vector<char>* is_target, std::size_t remaining) {
  std::vector<char> settled(graph.node_count(), 0);
  MinQueue queue;
  dist[source.index] = 0.0;
  queue.emplace(0.0, source.index);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    if (is_target != nullptr && (*is_target)[u]) {
      if (--remaining == 0) return;
    }
    const auto arcs = direction == SearchDirection::kForward ? graph.out_arcs(NodeRef{u})
                                                             : graph.in_arcs(NodeRef{u});
    for (const Arc& a : arcs) {
      const double nd = d + a.length_m;
      if (nd < dist[a.head]) {
        dist[a.head] = nd;
        queue.emplace(nd, a.head);
      }
    }
  }
}

}  // namespace

std::vector<double> dijkstra_one_to_many(const RoadGraph& graph, NodeRef source,
                                         std::span<const NodeRef> targets,
                                         SearchDirection direction) {
  std::vector<double> dist(graph.node_count(), kUnreachable);
  std::vector<char> is_target(graph.node_count(), 0);
  std::size_t distinct = 0;
  for (NodeRef t : targets) {
    if (!is_target[t.index]) {
      is_target[t.index] = 1;
      ++distinct;
    }
  }
  if (distinct > 0) run(graph, source, direction, dist, &is_target, distinct);

  std::vector<double> out;
  out.reserve(targets.size());
  for (NodeRef t : targets) out.push_back(dist[t.index]);
  return out;
}

std::vector<double> dijkstra_one_to_all(const RoadGraph& graph, NodeRef source,
                                        SearchDirection direction) {
  std::vector<double> dist(graph.node_count(), kUnreachable);
  run(graph, source, direction, dist, nullptr, 0);
  return dist;
}

}  // namespace hubloc
