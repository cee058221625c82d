#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "hubloc/geo.hpp"

namespace hubloc::geojson {

using Json = nlohmann::json;

/// Parses a Polygon geometry (closed rings; the repeated last vertex is dropped).
GeoPolygon parse_polygon(const Json& coordinates);

/// Region input: a Polygon or MultiPolygon given as a bare geometry, a
/// Feature, or a FeatureCollection holding exactly one feature.
std::vector<GeoPolygon> parse_region(const Json& doc);
std::vector<GeoPolygon> read_region(const std::filesystem::path& path);

struct WeightedRegion {
  std::string name;
  GeoPolygon polygon;
  long long population = 0;
};

/// FeatureCollection of Polygon features with `name` and `population`.
std::vector<WeightedRegion> parse_weighted_regions(const Json& doc);
std::vector<WeightedRegion> read_weighted_regions(const std::filesystem::path& path);

Json point_geometry(const GeoPoint& p);
/// Rings are written closed, exterior counter-clockwise, holes clockwise.
Json polygon_geometry(const GeoPolygon& poly);
Json feature(Json geometry, Json properties);
Json feature_collection(std::vector<Json> features);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc, int indent = -1);

}  // namespace hubloc::geojson
