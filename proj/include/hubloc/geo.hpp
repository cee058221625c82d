#pragma once

#include <span>
#include <vector>

namespace hubloc {

/// Mean Earth radius of the spherical model, in meters.
inline constexpr double kEarthRadiusM = 6'371'000.0;

/// WGS84 coordinate in degrees.
struct GeoPoint {
  double lon = 0.0;
  double lat = 0.0;

  bool valid() const noexcept;
  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

using Ring = std::vector<GeoPoint>;

/// Polygon with an implicitly closed exterior ring and optional holes.
/// Coordinates are treated as planar (lon, lat) for containment.
struct GeoPolygon {
  Ring exterior;
  std::vector<Ring> holes;
};

struct BoundingBox {
  double min_lon, min_lat, max_lon, max_lat;
};

/// Great-circle distance on a sphere of radius kEarthRadiusM.
double haversine_m(const GeoPoint& a, const GeoPoint& b) noexcept;

/// Even-odd containment. Points in holes are outside; points on an edge or
/// vertex of any ring count as inside the ring they touch.
bool point_in_polygon(const GeoPoint& pt, const GeoPolygon& poly) noexcept;

/// True when the point is inside any of the polygons.
bool point_in_region(const GeoPoint& pt, std::span<const GeoPolygon> region) noexcept;

BoundingBox bounding_box(const GeoPolygon& poly) noexcept;
BoundingBox bounding_box(std::span<const GeoPolygon> region) noexcept;

/// Planar shoelace area of a ring in square degrees (absolute value).
double ring_area_deg2(const Ring& ring) noexcept;

}  // namespace hubloc
