#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hubloc/geo.hpp"
#include "hubloc/road_graph.hpp"

namespace hubloc {

enum class DemandSource { kDeliveries, kPopulation };

struct DemandPoint {
  std::string id;
  GeoPoint position;
  std::optional<NodeRef> node;  // set once snapped
  std::string region;           // generating region for population demand
};

struct DemandSet {
  std::vector<DemandPoint> points;
  DemandSource source = DemandSource::kDeliveries;
  /// Input rows dropped for invalid coordinates.
  std::size_t skipped = 0;

  std::size_t size() const noexcept { return points.size(); }
  std::vector<NodeRef> nodes() const;  // throws if any point is unsnapped
};

inline constexpr const char* kDemandHeader = "delivery_id,lon,lat";

/// Reads `delivery_id,lon,lat` rows. Rows with unparsable or out-of-range
/// coordinates are dropped and counted; throws "empty demand set" if none
/// survive.
DemandSet read_deliveries(std::istream& in);
DemandSet read_deliveries(const std::filesystem::path& path);

/// read_deliveries followed by snap_demand.
DemandSet load_deliveries(std::istream& in, const RoadGraph& graph);

/// Snaps every point to its nearest node. Returns the largest snap distance.
double snap_demand(DemandSet& demand, const RoadGraph& graph);

/// Uniform sample of n points without replacement, survivors kept in their
/// original order. Partial Fisher-Yates over indices 0..|d|-1 driven by
/// Rng(seed).below().
DemandSet sample_demand(const DemandSet& demand, std::size_t n, std::uint64_t seed);

/// Largest-remainder apportionment of `total` in proportion to the raw
/// counts. Leftover units go to the largest fractional parts, ties to the
/// earlier entry.
std::vector<std::pair<std::string, long long>> scale_weights(
    std::span<const std::pair<std::string, long long>> raw_counts, long long total);

struct RegionWeight {
  std::string name;
  GeoPolygon polygon;
  long long count = 0;  // already scaled
};
using RegionWeights = std::vector<RegionWeight>;

/// Per region, in input order, draws exactly `count` points uniformly inside
/// the polygon by bounding-box rejection sampling (at most 10,000 consecutive
/// rejections per point). Points are not snapped. Ids are `p<k>`, k running
/// over the whole set.
DemandSet sample_population_points(const RegionWeights& weights, std::uint64_t seed);

/// sample_population_points followed by snap_demand.
DemandSet generate_population_demand(const RegionWeights& weights, const RoadGraph& graph,
                                     std::uint64_t seed);

void save_demand(const DemandSet& demand, std::ostream& out);
void save_demand(const DemandSet& demand, const std::filesystem::path& path);

}  // namespace hubloc
