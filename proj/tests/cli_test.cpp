#include <sstream>

#include <gtest/gtest.h>

#include "hubloc/cli.hpp"
#include "hubloc/geojson.hpp"
#include "test_support.hpp"

namespace hubloc {
namespace {

using testing::read_file;
using testing::TempDir;
using testing::write_file;

struct Outcome {
  int code;
  std::string diag;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream diag;
  const int code = cli::run(args, diag);
  return {code, diag.str()};
}

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

// Three nodes on an east-west line, 1 km apart, two-way.
void write_line_graph(const TempDir& dir) {
  write_file(dir / "nodes.csv", "node_id,lon,lat\nn0,74.30,31.50\nn1,74.3105,31.50\nn2,74.321,31.50\n");
  write_file(dir / "edges.csv", "from_id,to_id,length_m,oneway\nn0,n1,1000,0\nn1,n2,1000,0\n");
}

void write_three_by_three(const TempDir& dir) {
  write_file(dir / "matrix.csv", "delivery_id,h0,h1,h2\nr0,5,2,9\nr1,4,7,1\nr2,3,3,3\n");
}

std::vector<std::string> graph_args(const TempDir& dir) {
  return {"--graph-nodes", (dir / "nodes.csv").string(), "--graph-edges", (dir / "edges.csv").string()};
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TEST(Cli, GenCandidatesWritesHeader) {
  TempDir dir;
  write_line_graph(dir);
  geojson::write_json(dir / "region.geojson",
                      geojson::polygon_geometry(testing::rect(74.295, 31.495, 74.325, 31.505)));
  const Outcome o = run_cli(concat({"gen-candidates", "--region", (dir / "region.geojson").string(), "--out",
                                    dir.path().string()},
                                   graph_args(dir)));
  ASSERT_EQ(o.code, cli::kExitOk) << o.diag;
  const std::string csv = read_file(dir / "candidates.csv");
  EXPECT_TRUE(csv.starts_with("candidate_id,lon,lat,node_id,snap_m\n"));
  EXPECT_GE(line_count(csv), 2u);
}

TEST(Cli, MissingGraphNamesPath) {
  TempDir dir;
  const std::string missing = (dir / "missing_nodes.csv").string();
  write_file(dir / "region.geojson", "{}");
  const Outcome o = run_cli({"gen-candidates", "--graph-nodes", missing, "--graph-edges", missing, "--region",
                             (dir / "region.geojson").string(), "--out", dir.path().string()});
  EXPECT_EQ(o.code, cli::kExitInputError);
  EXPECT_NE(o.diag.find(missing), std::string::npos) << o.diag;
}

TEST(Cli, PopulationDemandIsDeterministic) {
  TempDir dir;
  geojson::write_json(dir / "pop.geojson", testing::district_geojson(557));
  const std::vector<std::string> base = {"gen-demand", "--population", (dir / "pop.geojson").string(), "--total",
                                         "20000", "--seed", "9"};
  ASSERT_EQ(run_cli(concat(base, {"--out", (dir / "a").string()})).code, cli::kExitOk);
  ASSERT_EQ(run_cli(concat(base, {"--out", (dir / "b").string()})).code, cli::kExitOk);
  const std::string a = read_file(dir / "a" / "demand.csv");
  EXPECT_EQ(a, read_file(dir / "b" / "demand.csv"));
  EXPECT_EQ(line_count(a), 20001u);
  EXPECT_TRUE(a.starts_with("delivery_id,lon,lat\n"));
}

TEST(Cli, DemandSourcesAreExclusive) {
  TempDir dir;
  const Outcome o = run_cli({"gen-demand", "--population", "p.geojson", "--deliveries", "d.csv", "--out",
                             dir.path().string()});
  EXPECT_EQ(o.code, cli::kExitInputError);
  EXPECT_NE(o.diag.find("mutually exclusive"), std::string::npos);
}

TEST(Cli, DeliverySampling) {
  TempDir dir;
  std::string csv = "delivery_id,lon,lat\n";
  for (int i = 0; i < 10; ++i) csv += "d" + std::to_string(i) + ",74.3,31.5\n";
  write_file(dir / "d.csv", csv);
  ASSERT_EQ(run_cli({"gen-demand", "--deliveries", (dir / "d.csv").string(), "--sample", "4", "--seed", "1",
                     "--out", dir.path().string()})
                .code,
            cli::kExitOk);
  EXPECT_EQ(line_count(read_file(dir / "demand.csv")), 5u);
}

TEST(Cli, BuildMatrixEnginesAgree) {
  TempDir dir;
  write_line_graph(dir);
  write_file(dir / "deliveries.csv", "delivery_id,lon,lat\na,74.30,31.50\nb,74.3105,31.50\nc,74.321,31.50\n");
  write_file(dir / "cands.csv",
             "candidate_id,lon,lat,node_id,snap_m\nc0,74.30,31.50,n0,0\nc1,74.321,31.50,n2,0\n");
  const auto base = concat({"build-matrix", "--deliveries", (dir / "deliveries.csv").string(), "--candidates",
                            (dir / "cands.csv").string(), "--existing", "74.3105,31.50"},
                           graph_args(dir));
  ASSERT_EQ(run_cli(concat(base, {"--out", (dir / "dj").string()})).code, cli::kExitOk);
  ASSERT_EQ(run_cli(concat(base, {"--engine", "ch", "--out", (dir / "ch").string()})).code, cli::kExitOk);
  const std::string m = read_file(dir / "dj" / "matrix.csv");
  EXPECT_EQ(m, read_file(dir / "ch" / "matrix.csv"));
  EXPECT_EQ(m, "delivery_id,c0,c1,existing_1\na,0,2000,1000\nb,1000,1000,0\nc,2000,0,1000\n");
  const std::string hubs = read_file(dir / "dj" / "hubs.csv");
  EXPECT_TRUE(hubs.starts_with("hub_id,lon,lat,node_id,role\n"));
  EXPECT_NE(hubs.find("existing_1,74.3105,31.5,n1,existing"), std::string::npos) << hubs;

  // Solve with the sidecar: existing_1 is the only existing hub.
  const Outcome o = run_cli({"solve", "--matrix", (dir / "dj" / "matrix.csv").string(), "--deliveries",
                             (dir / "deliveries.csv").string(), "--out", (dir / "solve").string()});
  ASSERT_EQ(o.code, cli::kExitOk) << o.diag;
  const auto report = geojson::read_json(dir / "solve" / "report.json");
  EXPECT_EQ(report["best_hub_id"], "c0");
  EXPECT_EQ(testing::validate_geojson(geojson::read_json(dir / "solve" / "hubs.geojson")), std::nullopt);
  EXPECT_EQ(testing::validate_geojson(geojson::read_json(dir / "solve" / "demand.geojson")), std::nullopt);
}

TEST(Cli, FarDeliveryWarns) {
  TempDir dir;
  write_line_graph(dir);
  write_file(dir / "deliveries.csv", "delivery_id,lon,lat\nfar,74.30,31.52\n");
  const Outcome o = run_cli(concat({"build-matrix", "--deliveries", (dir / "deliveries.csv").string(),
                                    "--existing", "74.30,31.50", "--out", dir.path().string()},
                                   graph_args(dir)));
  ASSERT_EQ(o.code, cli::kExitOk) << o.diag;
  EXPECT_NE(o.diag.find("warning"), std::string::npos) << o.diag;
}

TEST(Cli, SolveThreeByThree) {
  TempDir dir;
  write_three_by_three(dir);
  const Outcome o = run_cli({"solve", "--matrix", (dir / "matrix.csv").string(), "--existing", "col:h0", "--out",
                             dir.path().string(), "--seed", "4"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.diag;
  const auto report = geojson::read_json(dir / "report.json");
  EXPECT_EQ(report["best_hub_id"], "h1");
  EXPECT_EQ(report["best_hub_column"], 1);
  EXPECT_DOUBLE_EQ(report["min_cost_m"].get<double>(), 9.0);

  const auto run = geojson::read_json(dir / "run.json");
  EXPECT_EQ(run["seed"], 4);
  EXPECT_EQ(run["version"], HUBLOC_VERSION);
  EXPECT_TRUE(run["solve_time_s"].is_number());
  EXPECT_EQ(run["config"]["existing"][0], "col:h0");

  // Column index form selects the same hub.
  ASSERT_EQ(run_cli({"solve", "--matrix", (dir / "matrix.csv").string(), "--existing", "col:0", "--out",
                     (dir / "idx").string()})
                .code,
            cli::kExitOk);
  EXPECT_EQ(geojson::read_json(dir / "idx" / "report.json")["best_hub_id"], "h1");
}

TEST(Cli, SolveHubsAsRows) {
  TempDir dir;
  write_file(dir / "t.csv", "hub_id,r0,r1,r2\nh0,5,4,3\nh1,2,7,3\nh2,9,1,3\n");
  ASSERT_EQ(run_cli({"solve", "--matrix", (dir / "t.csv").string(), "--hubs-as-rows", "--existing", "col:h0",
                     "--out", dir.path().string()})
                .code,
            cli::kExitOk);
  EXPECT_EQ(geojson::read_json(dir / "report.json")["best_hub_id"], "h1");
}

TEST(Cli, RelocateStaysPut) {
  TempDir dir;
  write_file(dir / "matrix.csv", "delivery_id,h0,h1,h2,h3\nr0,1,9,9,8\nr1,9,1,9,7\nr2,9,1,9,7\n");
  const Outcome o = run_cli({"relocate", "--matrix", (dir / "matrix.csv").string(), "--existing", "col:h0",
                             "--existing", "col:h1", "--remove", "col:h1", "--out", dir.path().string()});
  ASSERT_EQ(o.code, cli::kExitOk) << o.diag;
  const auto report = geojson::read_json(dir / "report.json");
  EXPECT_EQ(report["best_hub_id"], "h1");
  EXPECT_EQ(report["stay_put"], true);
}

TEST(Cli, ReportForGivenHub) {
  TempDir dir;
  write_three_by_three(dir);
  ASSERT_EQ(run_cli({"report", "--matrix", (dir / "matrix.csv").string(), "--existing", "col:h0", "--add",
                     "col:h2", "--out", dir.path().string()})
                .code,
            cli::kExitOk);
  const auto report = geojson::read_json(dir / "report.json");
  EXPECT_EQ(report["best_hub_id"], "h2");
  EXPECT_DOUBLE_EQ(report["avg_before_km"].get<double>(), 0.004);
  EXPECT_DOUBLE_EQ(report["avg_after_km"].get<double>(), 0.003);
}

TEST(Cli, InfeasibleListsDeliveries) {
  TempDir dir;
  write_file(dir / "matrix.csv", "delivery_id,h0,h1\nr0,1,5\nr1,,\nr2,3,1\n");
  const Outcome o = run_cli({"solve", "--matrix", (dir / "matrix.csv").string(), "--existing", "col:h0", "--out",
                             dir.path().string()});
  EXPECT_EQ(o.code, cli::kExitInfeasible);
  EXPECT_NE(o.diag.find("r1"), std::string::npos) << o.diag;
}

TEST(Cli, BadArgumentsAreInputErrors) {
  TempDir dir;
  write_three_by_three(dir);
  EXPECT_EQ(run_cli({"solve", "--matrix", (dir / "matrix.csv").string(), "--existing", "col:nope"}).code,
            cli::kExitInputError);
  EXPECT_EQ(run_cli({"solve", "--matrix", (dir / "matrix.csv").string()}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"no-such-command"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"build-matrix", "--engine", "astar"}).code, cli::kExitInputError);
}

}  // namespace
}  // namespace hubloc
