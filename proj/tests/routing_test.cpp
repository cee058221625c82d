#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "hubloc/contraction.hpp"
#include "hubloc/dijkstra.hpp"
#include "hubloc/distance_matrix.hpp"
#include "hubloc/error.hpp"
#include "hubloc/synthetic.hpp"
#include "test_support.hpp"

namespace hubloc {
namespace {

using testing::kInf;

RoadGraph path_graph() {
  // a -100- b -200- c -50- d, all two-way
  std::vector<RoadNode> nodes = {{"a", {74.30, 31.5}}, {"b", {74.31, 31.5}}, {"c", {74.32, 31.5}}, {"d", {74.33, 31.5}}};
  std::vector<RoadEdge> edges = {{0, 1, 100}, {1, 0, 100}, {1, 2, 200}, {2, 1, 200}, {2, 3, 50}, {3, 2, 50}};
  return RoadGraph(nodes, edges);
}

RoadGraph two_islands() {
  std::vector<RoadNode> nodes = {{"a", {0, 0}}, {"b", {0.01, 0}}, {"c", {1, 1}}};
  return RoadGraph(nodes, {{0, 1, 5}, {1, 0, 5}});
}

void expect_close(double got, double want) {
  if (std::isinf(want)) {
    EXPECT_TRUE(std::isinf(got));
  } else {
    EXPECT_NEAR(got, want, 1e-9 * std::max(1.0, want));
  }
}

TEST(Dijkstra, SourceAmongTargets) {
  const RoadGraph g = path_graph();
  const NodeRef targets[] = {NodeRef{0}, NodeRef{2}};
  const auto d = dijkstra_one_to_many(g, NodeRef{0}, targets);
  EXPECT_EQ(d[0], 0.0);
  EXPECT_EQ(d[1], 300.0);
}

TEST(Dijkstra, DisconnectedIsInfinite) {
  std::vector<RoadNode> nodes = {{"a", {0, 0}}, {"b", {1, 1}}};
  const RoadGraph g(nodes, {});
  const NodeRef targets[] = {NodeRef{1}};
  EXPECT_TRUE(std::isinf(dijkstra_one_to_many(g, NodeRef{0}, targets)[0]));
}

TEST(Dijkstra, MatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RoadGraph g = testing::random_graph(seed, {.nodes = 50, .extra_edges = 80, .connected = seed % 3 != 0,
                                                     .integer_lengths = seed % 2 == 0});
    const auto fw = testing::floyd_warshall(g);
    std::vector<NodeRef> all;
    for (std::uint32_t v = 0; v < g.node_count(); ++v) all.push_back(NodeRef{v});
    for (std::uint32_t s = 0; s < g.node_count(); s += 7) {
      const auto fwd = dijkstra_one_to_many(g, NodeRef{s}, all);
      const auto rev = dijkstra_one_to_many(g, NodeRef{s}, all, SearchDirection::kReverse);
      for (std::uint32_t t = 0; t < g.node_count(); ++t) {
        expect_close(fwd[t], fw[s][t]);
        expect_close(rev[t], fw[t][s]);
      }
    }
  }
}

TEST(ContractionHierarchy, MiddleOfPathForcesShortcut) {
  std::vector<RoadNode> nodes = {{"a", {0, 0}}, {"b", {0.01, 0}}, {"c", {0.02, 0}}};
  const RoadGraph g(nodes, {{0, 1, 3}, {1, 0, 3}, {1, 2, 4}, {2, 1, 4}});
  ChOptions opts;
  opts.order = {NodeRef{1}, NodeRef{0}, NodeRef{2}};
  const auto ch = ContractionHierarchy::build(g, opts);
  ASSERT_EQ(ch.shortcut_count(), 2u);
  for (const Shortcut& s : ch.shortcuts()) {
    EXPECT_EQ(s.middle.index, 1u);
    EXPECT_EQ(s.length_m, 7.0);
  }
  EXPECT_EQ(ch.query(NodeRef{0}, NodeRef{2}), 7.0);
  EXPECT_EQ(ch.query(NodeRef{2}, NodeRef{0}), 7.0);
}

TEST(ContractionHierarchy, MetricCompleteGraphNeedsNoShortcuts) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> len(10, 15);  // any two sum to more than one
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RoadNode> nodes;
    for (int i = 0; i < 4; ++i) nodes.push_back({std::to_string(i), {0.01 * i, 0}});
    std::vector<RoadEdge> edges;
    for (std::uint32_t a = 0; a < 4; ++a) {
      for (std::uint32_t b = a + 1; b < 4; ++b) {
        const double l = len(rng);
        edges.push_back({a, b, l});
        edges.push_back({b, a, l});
      }
    }
    const RoadGraph g(nodes, edges);
    // Witness-search oracle: the direct edge u->w is always shorter than any
    // two-edge detour, so no contraction can require a shortcut.
    const auto fw = testing::floyd_warshall(g);
    for (const RoadEdge& e : g.edges()) ASSERT_EQ(fw[e.from][e.to], e.length_m);
    EXPECT_EQ(ContractionHierarchy::build(g).shortcut_count(), 0u);
  }
}

TEST(ContractionHierarchy, RandomGraphMatchesDijkstraExactly) {
  const RoadGraph g = testing::random_graph(77, {.nodes = 200, .extra_edges = 400});
  const auto ch = ContractionHierarchy::build(g);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> pick(0, 199);
  for (int k = 0; k < 1000; ++k) {
    const NodeRef s{pick(rng)}, t{pick(rng)};
    const NodeRef targets[] = {t};
    ASSERT_EQ(ch_query(ch, g, s, t), dijkstra_one_to_many(g, s, targets)[0]) << s.index << "->" << t.index;
  }
}

TEST(ContractionHierarchy, GridMatchesDijkstraExactly) {
  const RoadGraph g = testing::grid_graph(10, 10, 3);
  const auto ch = ContractionHierarchy::build(g);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::uint32_t> pick(0, 99);
  for (int k = 0; k < 500; ++k) {
    const NodeRef s{pick(rng)}, t{pick(rng)};
    const NodeRef targets[] = {t};
    ASSERT_EQ(ch.query(s, t), dijkstra_one_to_many(g, s, targets)[0]);
  }
}

TEST(ContractionHierarchy, TrivialQueries) {
  const RoadGraph g = two_islands();
  const auto ch = ContractionHierarchy::build(g);
  EXPECT_EQ(ch.query(NodeRef{2}, NodeRef{2}), 0.0);
  EXPECT_TRUE(std::isinf(ch.query(NodeRef{0}, NodeRef{2})));
  EXPECT_EQ(ch.query(NodeRef{1}, NodeRef{0}), 5.0);
}

TEST(ContractionHierarchy, StaleIndexRejected) {
  const RoadGraph g1 = testing::random_graph(1, {.nodes = 30});
  const RoadGraph g2 = testing::random_graph(2, {.nodes = 30});
  const auto ch = ContractionHierarchy::build(g1);
  EXPECT_THROW(ch_query(ch, g2, NodeRef{0}, NodeRef{1}), StaleIndexError);
  EXPECT_NO_THROW(ch_query(ch, g1, NodeRef{0}, NodeRef{1}));
}

TEST(ContractionHierarchy, ShortcutsUnpackToRealPaths) {
  const RoadGraph g = testing::random_graph(31, {.nodes = 150, .extra_edges = 300, .integer_lengths = false});
  const auto ch = ContractionHierarchy::build(g);
  const auto fw = testing::floyd_warshall(g);
  ASSERT_GT(ch.shortcut_count(), 0u);
  for (const Shortcut& s : ch.shortcuts()) {
    EXPECT_LT(ch.rank(s.middle), ch.rank(s.from));
    EXPECT_LT(ch.rank(s.middle), ch.rank(s.to));
    const auto path = ch.unpack(s.from, s.to);
    ASSERT_GE(path.size(), 3u);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      double best = kInf;
      for (const Arc& a : g.out_arcs(path[k])) {
        if (a.head == path[k + 1].index) best = std::min(best, a.length_m);
      }
      ASSERT_FALSE(std::isinf(best)) << "unpacked hop is not a road edge";
      sum += best;
    }
    EXPECT_NEAR(sum, s.length_m, 1e-9 * s.length_m);
    EXPECT_GE(s.length_m, fw[s.from.index][s.to.index] * (1 - 1e-12));
  }
}

TEST(ContractionHierarchy, TinyWitnessBudgetStaysExact) {
  const RoadGraph g = testing::random_graph(12, {.nodes = 120, .extra_edges = 250});
  ChOptions opts;
  opts.witness_settled_limit = 1;
  const auto ch = ContractionHierarchy::build(g, opts);
  const auto reference = ContractionHierarchy::build(g);
  EXPECT_GE(ch.shortcut_count(), reference.shortcut_count());
  const auto fw = testing::floyd_warshall(g);
  for (std::uint32_t s = 0; s < g.node_count(); s += 5) {
    for (std::uint32_t t = 0; t < g.node_count(); t += 3) {
      ASSERT_EQ(ch.query(NodeRef{s}, NodeRef{t}), fw[s][t]);
    }
  }
}

TEST(ContractionHierarchy, OneToAllBothDirections) {
  const RoadGraph g = testing::random_graph(40, {.nodes = 100, .extra_edges = 250});
  const auto ch = ContractionHierarchy::build(g);
  for (std::uint32_t s = 0; s < g.node_count(); s += 9) {
    EXPECT_EQ(ch.one_to_all(NodeRef{s}), dijkstra_one_to_all(g, NodeRef{s}));
    EXPECT_EQ(ch.one_to_all(NodeRef{s}, SearchDirection::kReverse),
              dijkstra_one_to_all(g, NodeRef{s}, SearchDirection::kReverse));
  }
}

TEST(DistanceMatrix, CoLocatedIsZero) {
  const RoadGraph g = path_graph();
  const NodeRef one[] = {NodeRef{2}};
  const DistanceMatrix m = build_distance_matrix(g, one, one);
  ASSERT_EQ(m.rows(), 1u);
  ASSERT_EQ(m.cols(), 1u);
  EXPECT_EQ(m.at(0, 0), 0.0);
}

TEST(DistanceMatrix, PathGraphHandTraced) {
  const RoadGraph g = path_graph();
  const NodeRef deliveries[] = {NodeRef{1}, NodeRef{2}, NodeRef{3}};
  const NodeRef hubs[] = {NodeRef{0}, NodeRef{3}};
  for (RoutingEngine engine : {RoutingEngine::kDijkstra, RoutingEngine::kContractionHierarchy}) {
    MatrixOptions opts;
    opts.engine = engine;
    const DistanceMatrix m = build_distance_matrix(g, deliveries, hubs, opts);
    const double expected[3][2] = {{100, 250}, {300, 50}, {350, 0}};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 2; ++j) EXPECT_EQ(m.at(i, j), expected[i][j]);
    }
    EXPECT_EQ(m.row_labels(), (std::vector<std::string>{"b", "c", "d"}));
    EXPECT_EQ(m.column_labels(), (std::vector<std::string>{"a", "d"}));
  }
}

TEST(DistanceMatrix, EnginesAgreeAndMatchFloydWarshall) {
  const RoadGraph g = testing::random_graph(101, {.nodes = 100, .extra_edges = 200});
  const auto fw = testing::floyd_warshall(g);
  std::vector<NodeRef> deliveries, hubs;
  for (std::uint32_t i = 0; i < 20; ++i) deliveries.push_back(NodeRef{(i * 7) % 100});
  for (std::uint32_t j = 0; j < 10; ++j) hubs.push_back(NodeRef{(j * 13 + 1) % 100});
  MatrixOptions dj, ch;
  ch.engine = RoutingEngine::kContractionHierarchy;
  const DistanceMatrix a = build_distance_matrix(g, deliveries, hubs, dj);
  const DistanceMatrix b = build_distance_matrix(g, deliveries, hubs, ch);
  EXPECT_EQ(a, b);
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(a.at(i, j), fw[hubs[j].index][deliveries[i].index]);
  }

  dj.direction = MatrixDirection::kDeliveryToHub;
  ch.direction = MatrixDirection::kDeliveryToHub;
  const DistanceMatrix ra = build_distance_matrix(g, deliveries, hubs, dj);
  EXPECT_EQ(ra, build_distance_matrix(g, deliveries, hubs, ch));
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(ra.at(i, j), fw[deliveries[i].index][hubs[j].index]);
  }
}

TEST(DistanceMatrix, ColumnEqualsOneToMany) {
  const RoadGraph g = testing::random_graph(55, {.nodes = 80, .extra_edges = 120, .integer_lengths = false});
  std::vector<NodeRef> deliveries, hubs;
  for (std::uint32_t i = 0; i < 30; ++i) deliveries.push_back(NodeRef{(i * 11) % 80});
  for (std::uint32_t j = 0; j < 6; ++j) hubs.push_back(NodeRef{j * 5});
  const DistanceMatrix m = build_distance_matrix(g, deliveries, hubs);
  for (std::size_t j = 0; j < hubs.size(); ++j) {
    const auto d = dijkstra_one_to_many(g, hubs[j], deliveries);
    for (std::size_t i = 0; i < deliveries.size(); ++i) EXPECT_EQ(m.at(i, j), d[i]);
  }
}

TEST(DistanceMatrix, ThreadCountDoesNotChangeOutput) {
  const RoadGraph g = testing::random_graph(8, {.nodes = 150, .extra_edges = 300, .integer_lengths = false});
  std::vector<NodeRef> deliveries, hubs;
  for (std::uint32_t i = 0; i < 150; i += 2) deliveries.push_back(NodeRef{i});
  for (std::uint32_t j = 0; j < 150; j += 9) hubs.push_back(NodeRef{j});
  for (RoutingEngine engine : {RoutingEngine::kDijkstra, RoutingEngine::kContractionHierarchy}) {
    MatrixOptions one, many;
    one.engine = many.engine = engine;
    many.threads = 4;
    EXPECT_EQ(build_distance_matrix(g, deliveries, hubs, one), build_distance_matrix(g, deliveries, hubs, many));
  }
}

TEST(DistanceMatrix, NetworkDistanceDominatesGreatCircle) {
  GridCityOptions city;
  city.rows = 12;
  city.cols = 12;
  city.width_m = city.height_m = 6000;
  city.integer_lengths = false;  // keep every edge >= its great-circle length
  const RoadGraph g = make_grid_city(city);
  for (const RoadEdge& e : g.edges()) {
    ASSERT_GE(e.length_m, haversine_m(g.nodes()[e.from].position, g.nodes()[e.to].position));
  }
  std::vector<NodeRef> all;
  for (std::uint32_t v = 0; v < g.node_count(); ++v) all.push_back(NodeRef{v});
  const NodeRef hubs[] = {NodeRef{0}, NodeRef{77}, NodeRef{143}};
  const DistanceMatrix m = build_distance_matrix(g, all, hubs);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double crow = haversine_m(g.node(all[i]).position, g.node(hubs[j]).position);
      EXPECT_GE(m.at(i, j), crow - 1e-6);
    }
  }
}

TEST(DistanceMatrix, ReusedHierarchyMustMatchGraph) {
  const RoadGraph g1 = testing::random_graph(1, {.nodes = 20});
  const RoadGraph g2 = testing::random_graph(2, {.nodes = 20});
  const auto ch = ContractionHierarchy::build(g1);
  MatrixOptions opts;
  opts.engine = RoutingEngine::kContractionHierarchy;
  opts.hierarchy = &ch;
  const NodeRef n[] = {NodeRef{0}};
  EXPECT_NO_THROW(build_distance_matrix(g1, n, n, opts));
  EXPECT_THROW(build_distance_matrix(g2, n, n, opts), StaleIndexError);
}

TEST(MatrixCsv, RoundTrip) {
  DistanceMatrix m({"d1", "d2", "d3"}, {"h1", "h2"});
  m.at(0, 0) = 12.5;
  m.at(0, 1) = 0.1;
  m.at(1, 0) = 1e7 / 3;
  m.at(1, 1) = kInf;
  m.at(2, 0) = 0;
  m.at(2, 1) = 123456789.123;
  std::stringstream ss;
  save_matrix(m, ss);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "delivery_id,h1,h2");
  EXPECT_EQ(load_matrix(ss), m);
}

TEST(MatrixCsv, NegativeCellNamesRow) {
  std::istringstream in("delivery_id,h1\nd1,4\nd2,-5\n");
  try {
    load_matrix(in);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
}

TEST(MatrixCsv, EmptyCellIsUnreachable) {
  std::istringstream in("delivery_id,h1,h2\nd1,,7\n");
  const DistanceMatrix m = load_matrix(in);
  EXPECT_TRUE(std::isinf(m.at(0, 0)));
  EXPECT_EQ(m.at(0, 1), 7.0);
}

TEST(MatrixCsv, RaggedRowRejected) {
  std::istringstream in("delivery_id,h1,h2\nd1,1,2\nd2,3\n");
  try {
    load_matrix(in);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
}

TEST(MatrixCsv, HubsAsRowsLayoutTransposes) {
  std::istringstream in("hub_id,d1,d2,d3\nh1,1,2,3\nh2,4,,6\n");
  const DistanceMatrix m = load_matrix(in, MatrixLayout::kHubsAsRows);
  ASSERT_EQ(m.rows(), 3u);
  ASSERT_EQ(m.cols(), 2u);
  EXPECT_EQ(m.at(2, 0), 3.0);
  EXPECT_EQ(m.at(0, 1), 4.0);
  EXPECT_TRUE(std::isinf(m.at(1, 1)));
  EXPECT_EQ(m.column_labels(), (std::vector<std::string>{"h1", "h2"}));
}

}  // namespace
}  // namespace hubloc
