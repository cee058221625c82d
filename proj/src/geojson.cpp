#include "hubloc/geojson.hpp"

#include <algorithm>
#include <fstream>

#include "hubloc/csv.hpp"
#include "hubloc/error.hpp"

namespace hubloc::geojson {

namespace {

GeoPoint parse_position(const Json& pos) {
  if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number()) {
    throw InputError("GeoJSON position must be [lon, lat]");
  }
  GeoPoint p{pos[0].get<double>(), pos[1].get<double>()};
  if (!p.valid()) throw InputError("GeoJSON position out of range");
  return p;
}

Ring parse_ring(const Json& ring) {
  if (!ring.is_array()) throw InputError("GeoJSON ring must be an array");
  Ring out;
  for (const Json& pos : ring) out.push_back(parse_position(pos));
  if (out.size() >= 2 && out.front() == out.back()) out.pop_back();
  if (out.size() < 3) throw InputError("GeoJSON ring needs at least 3 distinct vertices");
  return out;
}

double signed_area(const Ring& ring) {
  double twice = 0.0;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    twice += ring[j].lon * ring[i].lat - ring[i].lon * ring[j].lat;
  }
  return twice / 2.0;
}

Json ring_json(Ring ring, bool ccw) {
  if ((signed_area(ring) > 0.0) != ccw) std::reverse(ring.begin(), ring.end());
  Json out = Json::array();
  for (const GeoPoint& p : ring) out.push_back({p.lon, p.lat});
  if (!ring.empty()) out.push_back({ring.front().lon, ring.front().lat});
  return out;
}

const Json& geometry_of(const Json& doc) {
  const std::string type = doc.value("type", "");
  if (type == "FeatureCollection") {
    const Json& features = doc.at("features");
    if (features.size() != 1) {
      throw InputError("region FeatureCollection must contain exactly one feature");
    }
    return geometry_of(features[0]);
  }
  if (type == "Feature") return doc.at("geometry");
  return doc;
}

}  // namespace

GeoPolygon parse_polygon(const Json& coordinates) {
  if (!coordinates.is_array() || coordinates.empty()) {
    throw InputError("Polygon coordinates must be a non-empty array of rings");
  }
  GeoPolygon poly;
  poly.exterior = parse_ring(coordinates[0]);
  for (std::size_t i = 1; i < coordinates.size(); ++i) poly.holes.push_back(parse_ring(coordinates[i]));
  return poly;
}

std::vector<GeoPolygon> parse_region(const Json& doc) {
  try {
    const Json& geom = geometry_of(doc);
    const std::string type = geom.value("type", "");
    if (type == "Polygon") return {parse_polygon(geom.at("coordinates"))};
    if (type == "MultiPolygon") {
      std::vector<GeoPolygon> out;
      for (const Json& poly : geom.at("coordinates")) out.push_back(parse_polygon(poly));
      if (out.empty()) throw InputError("empty MultiPolygon");
      return out;
    }
    throw InputError("region geometry must be Polygon or MultiPolygon, got '" + type + "'");
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed region GeoJSON: ") + e.what());
  }
}

std::vector<GeoPolygon> read_region(const std::filesystem::path& path) {
  try {
    return parse_region(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<WeightedRegion> parse_weighted_regions(const Json& doc) {
  try {
    if (doc.value("type", "") != "FeatureCollection") {
      throw InputError("weights file must be a FeatureCollection");
    }
    std::vector<WeightedRegion> out;
    for (const Json& f : doc.at("features")) {
      const Json& geom = f.at("geometry");
      if (geom.value("type", "") != "Polygon") throw InputError("weight features must be Polygons");
      const Json& props = f.at("properties");
      WeightedRegion r;
      r.name = props.at("name").get<std::string>();
      const Json& pop = props.at("population");
      if (!pop.is_number_integer()) throw InputError("population of '" + r.name + "' must be an integer");
      r.population = pop.get<long long>();
      if (r.population < 0) throw InputError("population of '" + r.name + "' is negative");
      r.polygon = parse_polygon(geom.at("coordinates"));
      out.push_back(std::move(r));
    }
    if (out.empty()) throw InputError("weights file has no features");
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed weights GeoJSON: ") + e.what());
  }
}

std::vector<WeightedRegion> read_weighted_regions(const std::filesystem::path& path) {
  try {
    return parse_weighted_regions(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json point_geometry(const GeoPoint& p) {
  return Json{{"type", "Point"}, {"coordinates", {p.lon, p.lat}}};
}

Json polygon_geometry(const GeoPolygon& poly) {
  Json rings = Json::array();
  rings.push_back(ring_json(poly.exterior, true));
  for (const Ring& hole : poly.holes) rings.push_back(ring_json(hole, false));
  return Json{{"type", "Polygon"}, {"coordinates", std::move(rings)}};
}

Json feature(Json geometry, Json properties) {
  return Json{{"type", "Feature"}, {"geometry", std::move(geometry)}, {"properties", std::move(properties)}};
}

Json feature_collection(std::vector<Json> features) {
  return Json{{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

Json read_json(const std::filesystem::path& path) {
  auto in = csv::open_input(path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": invalid JSON: " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& doc, int indent) {
  auto out = csv::open_output(path);
  out << doc.dump(indent) << '\n';
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace hubloc::geojson
