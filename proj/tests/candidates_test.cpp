#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hubloc/candidates.hpp"
#include "hubloc/error.hpp"
#include "test_support.hpp"

namespace hubloc {
namespace {

GeoPolygon square_m(GeoPoint sw, double side_m) {
  const double dlat = side_m / kMetersPerDegree;
  const double mean_lat = sw.lat + dlat / 2;
  const double dlon = side_m / (kMetersPerDegree * std::cos(mean_lat * std::numbers::pi / 180));
  return testing::rect(sw.lon, sw.lat, sw.lon + dlon, sw.lat + dlat);
}

TEST(GenerateGrid, ThreeKmSquareGivesNinePoints) {
  // floor(3000 / 1300) + 1 = 3 lattice lines per axis.
  const auto pts = generate_grid(square_m({74.3, 31.5}, 3000), 1300);
  EXPECT_EQ(pts.size(), 9u);
}

TEST(GenerateGrid, WideSpacingKeepsAnchor) {
  const GeoPolygon sq = square_m({74.3, 31.5}, 500);
  const auto pts = generate_grid(sq, 5000);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], (GeoPoint{74.3, 31.5}));
}

TEST(GenerateGrid, NeighborSpacingMatchesGreatCircle) {
  for (double lat : {30.0, 45.0, 55.0}) {
    const auto pts = generate_grid(square_m({10.0, lat}, 8000), 1300);
    ASSERT_GE(pts.size(), 4u);
    // Row-major: the first two points are east-west neighbors, the first and
    // (cols)th are north-south neighbors.
    std::size_t cols = 1;
    while (cols < pts.size() && pts[cols].lat == pts[0].lat) ++cols;
    const double ew = haversine_m(pts[0], pts[1]);
    const double ns = haversine_m(pts[0], pts[cols]);
    for (double d : {ew, ns}) {
      EXPECT_GE(d, 0.99 * 1300) << lat;
      EXPECT_LE(d, 1.01 * 1300) << lat;
    }
  }
}

TEST(GenerateGrid, RowMajorAndInsideRegion) {
  const auto w = testing::district_weights();
  const GeoPolygon& concave = w[1].polygon;  // L-shaped
  const auto pts = generate_grid(concave, 700);
  ASSERT_FALSE(pts.empty());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    EXPECT_TRUE(point_in_polygon(pts[k], concave));
    if (k > 0) {
      EXPECT_TRUE(pts[k].lat > pts[k - 1].lat || (pts[k].lat == pts[k - 1].lat && pts[k].lon > pts[k - 1].lon));
    }
  }
  // The notch of the L must stay empty.
  for (const GeoPoint& p : pts) EXPECT_FALSE(p.lon > 74.395 && p.lat > 31.475);
}

TEST(GenerateGrid, TinyRegionIsEmptyNotError) {
  // SW bounding-box corner lies outside the triangle and the next lattice
  // lines are beyond it.
  const GeoPolygon tri{{{74.30, 31.501}, {74.301, 31.5}, {74.301, 31.501}}, {}};
  EXPECT_TRUE(generate_grid(tri, 1300).empty());
  EXPECT_THROW(generate_grid(tri, 0.0), InputError);
}

TEST(SnapCandidates, RulesForDistanceAndDuplicates) {
  std::vector<RoadNode> nodes = {{"n0", {74.30, 31.50}}, {"n1", {74.32, 31.50}}};
  const RoadGraph g(nodes, {{0, 1, 2000}, {1, 0, 2000}});
  const std::vector<GeoPoint> raw = {
      {74.30, 31.50},    // on n0
      {74.3001, 31.50},  // ~10 m from n0: duplicate
      {74.32, 31.55},    // ~5.5 km from anything
      {74.3199, 31.50},  // near n1
  };
  const CandidateSet set = snap_candidates(g, raw, 1000);
  ASSERT_EQ(set.points.size(), 2u);
  EXPECT_EQ(set.points[0].id, "c0");
  EXPECT_EQ(set.points[0].snap_m, 0.0);
  EXPECT_EQ(set.points[0].node.index, 0u);
  EXPECT_EQ(set.points[1].id, "c3");
  EXPECT_EQ(set.points[1].node.index, 1u);
  EXPECT_EQ(set.dropped_far, 1u);
  EXPECT_EQ(set.dropped_duplicate, 1u);
}

TEST(SnapCandidates, UniqueNodesAndBoundedSize) {
  const RoadGraph g = testing::grid_graph(20, 20, 1);
  const GeoPolygon area = testing::rect(74.29, 31.49, 74.39, 31.59);
  const auto raw = generate_grid(area, 300);
  const CandidateSet set = snap_candidates(g, raw, kDefaultMaxSnapM);
  EXPECT_LE(set.points.size(), raw.size());
  std::set<std::uint32_t> nodes;
  std::set<std::string> ids;
  for (const Candidate& c : set.points) {
    EXPECT_TRUE(nodes.insert(c.node.index).second);
    EXPECT_TRUE(ids.insert(c.id).second);
    EXPECT_LE(c.snap_m, kDefaultMaxSnapM);
  }
  EXPECT_EQ(set.points.size() + set.dropped_far + set.dropped_duplicate, raw.size());
}

TEST(CandidateCsv, RoundTrip) {
  const RoadGraph g = testing::grid_graph(5, 5, 1);
  const auto raw = generate_grid(testing::rect(74.3, 31.5, 74.316, 31.516), 500);
  const CandidateSet set = snap_candidates(g, raw, 1000);
  std::stringstream ss;
  save_candidates(set, g, ss);
  const auto rows = load_candidates(ss);
  ASSERT_EQ(rows.size(), set.points.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].id, set.points[k].id);
    EXPECT_EQ(rows[k].position, set.points[k].position);
    EXPECT_EQ(rows[k].node_id, g.node(set.points[k].node).id);
    EXPECT_EQ(rows[k].snap_m, set.points[k].snap_m);
  }
}

}  // namespace
}  // namespace hubloc
