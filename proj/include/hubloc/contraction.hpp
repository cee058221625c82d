#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hubloc/dijkstra.hpp"
#include "hubloc/road_graph.hpp"

namespace hubloc {

/// Raised when an index is queried against a graph it was not built from.
class StaleIndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChOptions {
  /// Witness searches give up after settling this many nodes; the shortcut
  /// is then inserted unconditionally.
  std::size_t witness_settled_limit = 500;
  /// Fixed contraction order (first entry contracted first). When empty the
  /// order comes from the lazy-update priority queue.
  std::vector<NodeRef> order;
};

/// Arc of the upward or downward search graph. `middle` is the contracted
/// node a shortcut bypasses, or kNoMiddle for an original road edge.
struct ChArc {
  static constexpr std::uint32_t kNoMiddle = 0xFFFFFFFFu;
  std::uint32_t head = 0;
  double length_m = 0.0;
  std::uint32_t middle = kNoMiddle;
  bool is_shortcut() const noexcept { return middle != kNoMiddle; }
};

struct Shortcut {
  NodeRef from, to, middle;
  double length_m = 0.0;
};

/// Contraction hierarchy over a RoadGraph.
///
/// Nodes are contracted one at a time, cheapest first by
/// (edge difference + number of already contracted neighbors), with
/// priorities refreshed lazily when a node reaches the top of the queue.
/// Contracting v adds a shortcut u->w for every pair of remaining neighbors
/// unless a bounded witness search finds a u->w path avoiding v that is no
/// longer than u->v->w. The result answers point-to-point queries with two
/// upward searches and one-to-all queries with an upward search followed by
/// a downward sweep in rank order.
class ContractionHierarchy {
 public:
  static ContractionHierarchy build(const RoadGraph& graph, const ChOptions& options = {});

  std::size_t node_count() const noexcept { return rank_.size(); }
  std::uint32_t rank(NodeRef n) const { return rank_[n.index]; }
  std::size_t shortcut_count() const noexcept { return shortcuts_.size(); }
  const std::vector<Shortcut>& shortcuts() const noexcept { return shortcuts_; }
  std::uint64_t graph_fingerprint() const noexcept { return fingerprint_; }

  /// Arcs v->x with rank(x) > rank(v).
  std::span<const ChArc> upward_out(NodeRef v) const noexcept;
  /// Arcs x->v with rank(x) > rank(v); `head` holds x.
  std::span<const ChArc> upward_in(NodeRef v) const noexcept;

  /// Throws StaleIndexError if `graph` is not the graph this index was built on.
  void check_fresh(const RoadGraph& graph) const;

  /// Shortest source->target distance, kUnreachable if none.
  double query(NodeRef source, NodeRef target) const;
  double query(const RoadGraph& graph, NodeRef source, NodeRef target) const;

  /// Distances for every node. kForward: source->node; kReverse: node->source.
  std::vector<double> one_to_all(NodeRef source,
                                 SearchDirection direction = SearchDirection::kForward) const;

  /// Hierarchy arc for the directed pair from->to, or nullptr.
  const ChArc* find_arc(NodeRef from, NodeRef to) const;

  /// Expands the hierarchy arc from->to into the node sequence of original
  /// road edges it stands for. Throws std::out_of_range if there is no arc.
  std::vector<NodeRef> unpack(NodeRef from, NodeRef to) const;

 private:
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> by_rank_;  // node index for each rank
  std::vector<std::uint32_t> out_offsets_, in_offsets_;
  std::vector<ChArc> out_arcs_, in_arcs_;
  std::vector<Shortcut> shortcuts_;
  std::uint64_t fingerprint_ = 0;
};

double ch_query(const ContractionHierarchy& index, const RoadGraph& graph, NodeRef source,
                NodeRef target);

}  // namespace hubloc
