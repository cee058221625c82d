#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hubloc/geo.hpp"
#include "hubloc/road_graph.hpp"

namespace hubloc {

/// Meters per degree of latitude used by the lattice (sphere of radius 6,371 km).
inline constexpr double kMetersPerDegree = 111'195.0;
inline constexpr double kDefaultSpacingM = 1300.0;
inline constexpr double kDefaultMaxSnapM = 650.0;

struct Candidate {
  std::string id;
  GeoPoint position;  // lattice point, before snapping
  NodeRef node;
  double snap_m = 0.0;
};

struct CandidateSet {
  std::vector<Candidate> points;
  double spacing_m = kDefaultSpacingM;
  /// Lattice points discarded because the nearest node was too far away.
  std::size_t dropped_far = 0;
  /// Lattice points discarded because an earlier point took the same node.
  std::size_t dropped_duplicate = 0;
};

/// Axis-aligned lattice anchored at the region's south-west bounding-box
/// corner, clipped to the region, in row-major order (south to north, west to
/// east within a row). The longitude step uses the cosine of the bounding
/// box's mean latitude.
std::vector<GeoPoint> generate_grid(std::span<const GeoPolygon> region,
                                    double spacing_m = kDefaultSpacingM);
std::vector<GeoPoint> generate_grid(const GeoPolygon& region, double spacing_m = kDefaultSpacingM);

/// Snaps lattice points to nodes, drops points further than `max_snap_m`
/// from any node, and keeps only the first point for each node.
/// Candidate ids are `c<k>` with k the position in the raw lattice.
CandidateSet snap_candidates(const RoadGraph& graph, std::span<const GeoPoint> raw,
                             double max_snap_m = kDefaultMaxSnapM);

inline constexpr const char* kCandidatesHeader = "candidate_id,lon,lat,node_id,snap_m";

void save_candidates(const CandidateSet& set, const RoadGraph& graph, std::ostream& out);
void save_candidates(const CandidateSet& set, const RoadGraph& graph,
                     const std::filesystem::path& path);

/// Candidate rows as stored on disk.
struct CandidateRow {
  std::string id;
  GeoPoint position;
  std::string node_id;
  double snap_m = 0.0;
};
std::vector<CandidateRow> load_candidates(std::istream& in);
std::vector<CandidateRow> load_candidates(const std::filesystem::path& path);

}  // namespace hubloc
