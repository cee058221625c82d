#pragma once

#include <limits>
#include <span>
#include <vector>

#include "hubloc/road_graph.hpp"

namespace hubloc {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// kForward measures source -> node along edge direction; kReverse measures
/// node -> source (the search walks edges backwards).
enum class SearchDirection { kForward, kReverse };

/// Exact shortest-path distances from `source` to each entry of `targets`
/// (same order, duplicates allowed). Unreachable targets get kUnreachable.
/// The search stops as soon as every target is settled.
std::vector<double> dijkstra_one_to_many(const RoadGraph& graph, NodeRef source,
                                         std::span<const NodeRef> targets,
                                         SearchDirection direction = SearchDirection::kForward);

/// Distances from `source` to every node, indexed by node.
std::vector<double> dijkstra_one_to_all(const RoadGraph& graph, NodeRef source,
                                        SearchDirection direction = SearchDirection::kForward);

}  // namespace hubloc
