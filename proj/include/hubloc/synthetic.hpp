#pragma once

#include <cstdint>

#include "hubloc/demand.hpp"
#include "hubloc/geo.hpp"
#include "hubloc/road_graph.hpp"

namespace hubloc {

/// Rectangular street grid used for desk-scale experiments and demos.
/// Vertical streets are two-way; a fraction of horizontal streets are one-way
/// with alternating direction, which keeps the graph strongly connected.
struct GridCityOptions {
  std::size_t rows = 40;
  std::size_t cols = 50;
  GeoPoint south_west{74.20, 31.35};
  double width_m = 28'000.0;
  double height_m = 28'000.0;
  /// Edge length = great-circle length times a factor drawn from this range.
  double detour_min = 1.0;
  double detour_max = 1.25;
  double oneway_row_fraction = 0.2;
  /// Round lengths to whole meters so sums are exact in float64.
  bool integer_lengths = true;
  std::uint64_t seed = 1;
};

RoadGraph make_grid_city(const GridCityOptions& options);

/// Bounding rectangle of the grid city.
GeoPolygon grid_city_outline(const GridCityOptions& options);

/// `count` delivery points inside `area`: a share drawn around a few random
/// hotspots, the rest uniform. Ids are `d<k>`.
DemandSet synthetic_deliveries(const GeoPolygon& area, std::size_t count, std::uint64_t seed,
                               std::size_t hotspots = 4, double hotspot_share = 0.6);

}  // namespace hubloc
