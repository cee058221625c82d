#include "hubloc/geo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hubloc {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

bool on_segment(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) noexcept {
  const double cross = (b.lon - a.lon) * (p.lat - a.lat) - (b.lat - a.lat) * (p.lon - a.lon);
  if (cross != 0.0) return false;
  return p.lon >= std::min(a.lon, b.lon) && p.lon <= std::max(a.lon, b.lon) &&
         p.lat >= std::min(a.lat, b.lat) && p.lat <= std::max(a.lat, b.lat);
}

enum class RingSide { kOutside, kInside, kBoundary };

RingSide classify(const GeoPoint& p, const Ring& ring) noexcept {
  const std::size_t n = ring.size();
  if (n < 3) return RingSide::kOutside;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const GeoPoint& a = ring[i];
    const GeoPoint& b = ring[j];
    if (on_segment(p, a, b)) return RingSide::kBoundary;
    if ((a.lat > p.lat) != (b.lat > p.lat)) {
      const double x = (b.lon - a.lon) * (p.lat - a.lat) / (b.lat - a.lat) + a.lon;
      if (p.lon < x) inside = !inside;
    }
  }
  return inside ? RingSide::kInside : RingSide::kOutside;
}

}  // namespace

bool GeoPoint::valid() const noexcept {
  return std::isfinite(lon) && std::isfinite(lat) && lat >= -90.0 && lat <= 90.0 &&
         lon >= -180.0 && lon <= 180.0;
}

double haversine_m(const GeoPoint& a, const GeoPoint& b) noexcept {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlambda = (b.lon - a.lon) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlambda / 2.0);
  // cos(phi1)*cos(phi2) is symmetric in a and b, so the result is exactly symmetric.
  double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusM * std::asin(std::sqrt(h));
}

bool point_in_polygon(const GeoPoint& pt, const GeoPolygon& poly) noexcept {
  switch (classify(pt, poly.exterior)) {
    case RingSide::kOutside:
      return false;
    case RingSide::kBoundary:
      return true;
    case RingSide::kInside:
      break;
  }
  for (const Ring& hole : poly.holes) {
    // A point on a hole boundary is on the polygon boundary: inside.
    if (classify(pt, hole) == RingSide::kInside) return false;
  }
  return true;
}

bool point_in_region(const GeoPoint& pt, std::span<const GeoPolygon> region) noexcept {
  return std::any_of(region.begin(), region.end(),
                     [&](const GeoPolygon& p) { return point_in_polygon(pt, p); });
}

BoundingBox bounding_box(const GeoPolygon& poly) noexcept {
  return bounding_box(std::span<const GeoPolygon>(&poly, 1));
}

BoundingBox bounding_box(std::span<const GeoPolygon> region) noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  BoundingBox box{inf, inf, -inf, -inf};
  for (const GeoPolygon& poly : region) {
    for (const GeoPoint& p : poly.exterior) {
      box.min_lon = std::min(box.min_lon, p.lon);
      box.min_lat = std::min(box.min_lat, p.lat);
      box.max_lon = std::max(box.max_lon, p.lon);
      box.max_lat = std::max(box.max_lat, p.lat);
    }
  }
  return box;
}

double ring_area_deg2(const Ring& ring) noexcept {
  const std::size_t n = ring.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    twice += (ring[j].lon * ring[i].lat) - (ring[i].lon * ring[j].lat);
  }
  return std::abs(twice) / 2.0;
}

}  // namespace hubloc
