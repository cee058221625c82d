#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hubloc/geo.hpp"

namespace hubloc {

/// Index of a node inside a RoadGraph.
struct NodeRef {
  std::uint32_t index = 0;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

struct RoadNode {
  std::string id;
  GeoPoint position;
};

/// Directed edge in input form.
struct RoadEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  double length_m = 0.0;
};

/// Outgoing (or incoming, in the reverse adjacency) arc.
struct Arc {
  std::uint32_t head = 0;
  double length_m = 0.0;
};

struct SnapResult {
  NodeRef node;
  double distance_m = 0.0;
};

/// Immutable directed road network with geo-referenced nodes.
///
/// Forward and reverse adjacency are both stored in compressed form so that
/// searches can run in either direction. The graph carries a fingerprint of
/// its topology and lengths that derived indexes use to detect staleness.
class RoadGraph {
 public:
  RoadGraph() = default;

  /// Validates and builds. Throws InputError on duplicate node ids, dangling
  /// endpoints, or non-positive / non-finite lengths.
  RoadGraph(std::vector<RoadNode> nodes, std::vector<RoadEdge> edges);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  const RoadNode& node(NodeRef n) const { return nodes_[n.index]; }
  const std::vector<RoadNode>& nodes() const noexcept { return nodes_; }
  const std::vector<RoadEdge>& edges() const noexcept { return edges_; }

  std::span<const Arc> out_arcs(NodeRef n) const noexcept;
  std::span<const Arc> in_arcs(NodeRef n) const noexcept;

  std::optional<NodeRef> find(const std::string& node_id) const;
  bool contains(NodeRef n) const noexcept { return n.index < nodes_.size(); }

  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  double total_length_m() const noexcept;

  /// Nearest node by great-circle distance; ties go to the lowest index.
  /// Throws InputError on an empty graph.
  SnapResult snap(const GeoPoint& pt) const;

 private:
  std::vector<RoadNode> nodes_;
  std::vector<RoadEdge> edges_;
  std::vector<std::uint32_t> out_offsets_, in_offsets_;
  std::vector<Arc> out_arcs_, in_arcs_;
  std::unordered_map<std::string, std::uint32_t> index_by_id_;
  std::uint64_t fingerprint_ = 0;
};

inline constexpr const char* kNodesHeader = "node_id,lon,lat";
inline constexpr const char* kEdgesHeader = "from_id,to_id,length_m,oneway";

/// Reads the nodes/edges CSV pair. oneway=0 rows become two directed edges.
RoadGraph load_graph(std::istream& nodes_csv, std::istream& edges_csv);
RoadGraph load_graph(const std::filesystem::path& nodes_csv,
                     const std::filesystem::path& edges_csv);

/// Writes nodes in index order and every directed edge as a oneway=1 row.
void save_graph(const RoadGraph& graph, std::ostream& nodes_csv, std::ostream& edges_csv);

SnapResult snap_to_node(const RoadGraph& graph, const GeoPoint& pt);

}  // namespace hubloc
