#include "hubloc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hubloc/candidates.hpp"
#include "hubloc/error.hpp"
#include "hubloc/rng.hpp"

namespace hubloc {

namespace {

double lon_step_deg(const GridCityOptions& o, double meters) {
  const double lat = o.south_west.lat + o.height_m / kMetersPerDegree / 2.0;
  return meters / (kMetersPerDegree * std::cos(lat * std::numbers::pi / 180.0));
}

}  // namespace

RoadGraph make_grid_city(const GridCityOptions& o) {
  if (o.rows < 2 || o.cols < 2) throw InputError("grid city needs at least 2x2 nodes");
  Rng rng(o.seed);
  const double dlat = o.height_m / kMetersPerDegree / static_cast<double>(o.rows - 1);
  const double dlon = lon_step_deg(o, o.width_m) / static_cast<double>(o.cols - 1);

  std::vector<RoadNode> nodes;
  nodes.reserve(o.rows * o.cols);
  for (std::size_t r = 0; r < o.rows; ++r) {
    for (std::size_t c = 0; c < o.cols; ++c) {
      nodes.push_back({"n" + std::to_string(r * o.cols + c),
                       {o.south_west.lon + static_cast<double>(c) * dlon,
                        o.south_west.lat + static_cast<double>(r) * dlat}});
    }
  }
  auto length = [&](std::size_t a, std::size_t b) {
    double len = haversine_m(nodes[a].position, nodes[b].position) * rng.uniform(o.detour_min, o.detour_max);
    if (o.integer_lengths) len = std::max(1.0, std::round(len));
    return len;
  };

  std::vector<RoadEdge> edges;
  for (std::size_t r = 0; r < o.rows; ++r) {
    const bool oneway = rng.uniform01() < o.oneway_row_fraction;
    for (std::size_t c = 0; c + 1 < o.cols; ++c) {
      const auto a = static_cast<std::uint32_t>(r * o.cols + c);
      const auto b = a + 1;
      const double len = length(a, b);
      if (!oneway || r % 2 == 0) edges.push_back({a, b, len});
      if (!oneway || r % 2 == 1) edges.push_back({b, a, len});
    }
  }
  for (std::size_t r = 0; r + 1 < o.rows; ++r) {
    for (std::size_t c = 0; c < o.cols; ++c) {
      const auto a = static_cast<std::uint32_t>(r * o.cols + c);
      const auto b = static_cast<std::uint32_t>(a + o.cols);
      const double len = length(a, b);
      edges.push_back({a, b, len});
      edges.push_back({b, a, len});
    }
  }
  return RoadGraph(std::move(nodes), std::move(edges));
}

GeoPolygon grid_city_outline(const GridCityOptions& o) {
  const GeoPoint sw = o.south_west;
  const double north = sw.lat + o.height_m / kMetersPerDegree;
  const double east = sw.lon + lon_step_deg(o, o.width_m);
  return GeoPolygon{{sw, {east, sw.lat}, {east, north}, {sw.lon, north}}, {}};
}

DemandSet synthetic_deliveries(const GeoPolygon& area, std::size_t count, std::uint64_t seed,
                               std::size_t hotspots, double hotspot_share) {
  Rng rng(seed);
  const BoundingBox box = bounding_box(area);
  auto uniform_point = [&] {
    while (true) {
      const GeoPoint p{rng.uniform(box.min_lon, box.max_lon), rng.uniform(box.min_lat, box.max_lat)};
      if (point_in_polygon(p, area)) return p;
    }
  };
  std::vector<GeoPoint> centers;
  for (std::size_t h = 0; h < hotspots; ++h) centers.push_back(uniform_point());
  const double radius_lon = (box.max_lon - box.min_lon) * 0.08;
  const double radius_lat = (box.max_lat - box.min_lat) * 0.08;

  DemandSet set;
  set.source = DemandSource::kDeliveries;
  set.points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    GeoPoint p;
    if (!centers.empty() && rng.uniform01() < hotspot_share) {
      const GeoPoint& c = centers[rng.below(centers.size())];
      do {
        // Sum of two uniforms: a cheap peaked distribution around the center.
        p = {c.lon + radius_lon * (rng.uniform01() + rng.uniform01() - 1.0),
             c.lat + radius_lat * (rng.uniform01() + rng.uniform01() - 1.0)};
      } while (!point_in_polygon(p, area));
    } else {
      p = uniform_point();
    }
    set.points.push_back({"d" + std::to_string(k), p, std::nullopt, {}});
  }
  return set;
}

}  // namespace hubloc
