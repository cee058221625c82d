#include "hubloc/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include "CLI11.hpp"

#include "hubloc/candidates.hpp"
#include "hubloc/csv.hpp"
#include "hubloc/demand.hpp"
#include "hubloc/distance_matrix.hpp"
#include "hubloc/error.hpp"
#include "hubloc/geojson.hpp"
#include "hubloc/report.hpp"
#include "hubloc/solver.hpp"

namespace hubloc::cli {

namespace fs = std::filesystem;
using Json = geojson::Json;

namespace {

inline constexpr const char* kHubsHeader = "hub_id,lon,lat,node_id,role";

struct HubRecord {
  std::string id;
  GeoPoint position;
  std::string node_id;
  std::string role;
};

void save_hubs(const std::vector<HubRecord>& hubs, const fs::path& path) {
  auto out = csv::open_output(path);
  out << kHubsHeader << '\n';
  for (const HubRecord& h : hubs) {
    out << h.id << ',' << csv::format_double(h.position.lon) << ','
        << csv::format_double(h.position.lat) << ',' << h.node_id << ',' << h.role << '\n';
  }
}

std::map<std::string, HubRecord> load_hubs(const fs::path& path) {
  auto in = csv::open_input(path);
  csv::Reader reader(in);
  reader.expect_header(kHubsHeader);
  std::map<std::string, HubRecord> hubs;
  while (auto row = reader.next()) {
    if (row->size() != 5) throw InputError(path.string() + " row " + std::to_string(reader.line()) + ": expected 5 fields");
    HubRecord h{(*row)[0],
                {csv::parse_double((*row)[1], "lon", reader.line()), csv::parse_double((*row)[2], "lat", reader.line())},
                (*row)[3],
                (*row)[4]};
    hubs.emplace(h.id, h);
  }
  return hubs;
}

std::optional<GeoPoint> parse_lon_lat(const std::string& text) {
  const auto parts = csv::split(text);
  if (parts.size() != 2) return std::nullopt;
  try {
    const GeoPoint p{csv::parse_double(parts[0], "lon", 0), csv::parse_double(parts[1], "lat", 0)};
    if (!p.valid()) throw InputError("coordinate out of range: " + text);
    return p;
  } catch (const InputError&) {
    throw InputError("cannot parse hub coordinate '" + text + "', expected lon,lat or col:<id>");
  }
}

std::size_t resolve_column(const DistanceMatrix& m, const std::string& spec) {
  if (!spec.starts_with("col:")) throw InputError("expected col:<id>, got '" + spec + "'");
  const std::string id = spec.substr(4);
  if (const auto c = m.find_column(id); c >= 0) return static_cast<std::size_t>(c);
  try {
    const long long idx = csv::parse_int(id, "column", 0);
    if (idx >= 0 && static_cast<std::size_t>(idx) < m.cols()) return static_cast<std::size_t>(idx);
  } catch (const InputError&) {
  }
  throw InputError("unknown matrix column '" + id + "'");
}

RoutingEngine parse_engine(const std::string& s) {
  return s == "ch" ? RoutingEngine::kContractionHierarchy : RoutingEngine::kDijkstra;
}

MatrixDirection parse_direction(const std::string& s) {
  return s == "delivery-to-hub" ? MatrixDirection::kDeliveryToHub : MatrixDirection::kHubToDelivery;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string(flag) + " is required");
}

RoadGraph load_graph_from(const RunConfig& cfg) {
  require(cfg.graph_nodes, "--graph-nodes");
  require(cfg.graph_edges, "--graph-edges");
  return load_graph(fs::path(cfg.graph_nodes), fs::path(cfg.graph_edges));
}

Json config_json(const RunConfig& cfg) {
  return Json{{"subcommand", cfg.subcommand},
              {"graph_nodes", cfg.graph_nodes},
              {"graph_edges", cfg.graph_edges},
              {"region", cfg.region},
              {"spacing_m", cfg.spacing_m},
              {"max_snap_m", cfg.max_snap_m},
              {"deliveries", cfg.deliveries},
              {"population", cfg.population},
              {"candidates", cfg.candidates},
              {"matrix", cfg.matrix},
              {"hubs", cfg.hubs},
              {"total", cfg.total},
              {"sample", cfg.sample},
              {"seed", cfg.seed},
              {"existing", cfg.existing},
              {"remove", cfg.remove},
              {"add", cfg.add},
              {"engine", cfg.engine},
              {"direction", cfg.direction},
              {"hubs_as_rows", cfg.hubs_as_rows},
              {"bin_km", cfg.bin_km},
              {"bin_origin_km", cfg.bin_origin_km},
              {"out", cfg.out},
              {"threads", cfg.threads}};
}

void write_run_json(const RunConfig& cfg, std::optional<double> solve_seconds) {
  Json run{{"config", config_json(cfg)},
           {"seed", cfg.seed},
           {"version", HUBLOC_VERSION},
           {"solve_time_s", solve_seconds ? Json(*solve_seconds) : Json(nullptr)}};
  geojson::write_json(fs::path(cfg.out) / "run.json", run, 2);
}

int cmd_gen_candidates(const RunConfig& cfg, std::ostream& diag) {
  require(cfg.region, "--region");
  const RoadGraph graph = load_graph_from(cfg);
  const auto region = geojson::read_region(cfg.region);
  const auto raw = generate_grid(region, cfg.spacing_m);
  CandidateSet set = snap_candidates(graph, raw, cfg.max_snap_m);
  set.spacing_m = cfg.spacing_m;
  if (set.dropped_far > 0) {
    diag << "warning: dropped " << set.dropped_far << " lattice points further than " << cfg.max_snap_m
         << " m from the road network\n";
  }
  if (set.dropped_duplicate > 0) {
    diag << "note: merged " << set.dropped_duplicate << " lattice points snapping to an already used node\n";
  }
  save_candidates(set, graph, fs::path(cfg.out) / "candidates.csv");
  diag << "wrote " << set.points.size() << " candidates (" << raw.size() << " lattice points)\n";
  write_run_json(cfg, std::nullopt);
  return kExitOk;
}

int cmd_gen_demand(const RunConfig& cfg, std::ostream& diag) {
  if (!cfg.population.empty() && !cfg.deliveries.empty()) {
    throw InputError("--population and --deliveries are mutually exclusive");
  }
  if (cfg.population.empty() && cfg.deliveries.empty()) {
    throw InputError("one of --population or --deliveries is required");
  }
  DemandSet demand;
  if (!cfg.population.empty()) {
    const auto regions = geojson::read_weighted_regions(cfg.population);
    std::vector<std::pair<std::string, long long>> raw;
    for (const auto& r : regions) raw.emplace_back(r.name, r.population);
    const auto scaled = scale_weights(raw, cfg.total);
    RegionWeights weights;
    for (std::size_t k = 0; k < regions.size(); ++k) {
      weights.push_back({regions[k].name, regions[k].polygon, scaled[k].second});
    }
    demand = sample_population_points(weights, cfg.seed);
  } else {
    demand = read_deliveries(fs::path(cfg.deliveries));
    if (demand.skipped > 0) diag << "warning: skipped " << demand.skipped << " rows with invalid coordinates\n";
    if (cfg.sample > 0) demand = sample_demand(demand, static_cast<std::size_t>(cfg.sample), cfg.seed);
  }
  if (!cfg.graph_nodes.empty() || !cfg.graph_edges.empty()) {
    const RoadGraph graph = load_graph_from(cfg);
    const double worst = snap_demand(demand, graph);
    if (worst > kSnapWarnM) diag << "warning: a demand point lies " << worst << " m from the nearest node\n";
  }
  save_demand(demand, fs::path(cfg.out) / "demand.csv");
  diag << "wrote " << demand.size() << " demand points\n";
  write_run_json(cfg, std::nullopt);
  return kExitOk;
}

int cmd_build_matrix(const RunConfig& cfg, std::ostream& diag) {
  require(cfg.deliveries, "--deliveries");
  const RoadGraph graph = load_graph_from(cfg);
  DemandSet demand = read_deliveries(fs::path(cfg.deliveries));
  if (demand.skipped > 0) diag << "warning: skipped " << demand.skipped << " demand rows with invalid coordinates\n";
  const double worst = snap_demand(demand, graph);
  if (worst > kSnapWarnM) diag << "warning: a delivery lies " << worst << " m from the nearest node\n";

  std::vector<HubRecord> hubs;
  std::vector<NodeRef> hub_nodes;
  if (!cfg.candidates.empty()) {
    for (const CandidateRow& c : load_candidates(fs::path(cfg.candidates))) {
      NodeRef node;
      if (auto found = graph.find(c.node_id)) {
        node = *found;
      } else {
        node = graph.snap(c.position).node;
      }
      hubs.push_back({c.id, c.position, graph.node(node).id, "candidate"});
      hub_nodes.push_back(node);
    }
  }
  for (std::size_t k = 0; k < cfg.existing.size(); ++k) {
    const auto p = parse_lon_lat(cfg.existing[k]);
    if (!p) throw InputError("build-matrix takes existing hubs as lon,lat, got '" + cfg.existing[k] + "'");
    const SnapResult snap = graph.snap(*p);
    if (snap.distance_m > kSnapWarnM) {
      diag << "warning: existing hub " << cfg.existing[k] << " snapped " << snap.distance_m
           << " m to node " << graph.node(snap.node).id << '\n';
    }
    hubs.push_back({"existing_" + std::to_string(k + 1), *p, graph.node(snap.node).id, "existing"});
    hub_nodes.push_back(snap.node);
  }
  if (hubs.empty()) throw InputError("no hubs: give --candidates and/or --existing");

  MatrixOptions options;
  options.engine = parse_engine(cfg.engine);
  options.direction = parse_direction(cfg.direction);
  options.threads = cfg.threads;
  std::vector<std::string> row_labels, col_labels;
  for (const DemandPoint& p : demand.points) row_labels.push_back(p.id);
  for (const HubRecord& h : hubs) col_labels.push_back(h.id);
  const auto deliveries = demand.nodes();
  const DistanceMatrix m = build_distance_matrix(graph, deliveries, hub_nodes, options,
                                                 std::move(row_labels), std::move(col_labels));
  save_matrix(m, fs::path(cfg.out) / "matrix.csv");
  save_hubs(hubs, fs::path(cfg.out) / "hubs.csv");
  diag << "wrote " << m.rows() << " x " << m.cols() << " distance matrix\n";
  write_run_json(cfg, std::nullopt);
  return kExitOk;
}

// Matrix plus everything needed to interpret its columns.
struct LoadedScenario {
  DistanceMatrix matrix;
  std::map<std::string, HubRecord> hubs;
  std::vector<std::size_t> existing;
  std::optional<DemandSet> demand;
};

LoadedScenario load_scenario(const RunConfig& cfg, std::ostream& diag) {
  require(cfg.matrix, "--matrix");
  LoadedScenario s;
  s.matrix = load_matrix(fs::path(cfg.matrix),
                         cfg.hubs_as_rows ? MatrixLayout::kHubsAsRows : MatrixLayout::kDeliveriesAsRows);
  fs::path hubs_path = cfg.hubs.empty() ? fs::path(cfg.matrix).parent_path() / "hubs.csv" : fs::path(cfg.hubs);
  if (!cfg.hubs.empty() || fs::exists(hubs_path)) s.hubs = load_hubs(hubs_path);
  if (!cfg.deliveries.empty()) s.demand = read_deliveries(fs::path(cfg.deliveries));

  std::vector<std::pair<std::string, GeoPoint>> coordinate_hubs;
  for (const std::string& spec : cfg.existing) {
    if (spec.starts_with("col:")) {
      s.existing.push_back(resolve_column(s.matrix, spec));
    } else if (auto p = parse_lon_lat(spec)) {
      coordinate_hubs.emplace_back(spec, *p);
    } else {
      throw InputError("cannot parse --existing '" + spec + "'");
    }
  }
  if (!coordinate_hubs.empty()) {
    // Route the extra hubs and append them as columns.
    if (!s.demand) throw InputError("--existing lon,lat needs --deliveries to locate matrix rows");
    const RoadGraph graph = load_graph_from(cfg);
    if (s.demand->size() != s.matrix.rows()) throw InputError("--deliveries does not match the matrix rows");
    for (std::size_t i = 0; i < s.matrix.rows(); ++i) {
      if (s.demand->points[i].id != s.matrix.row_labels()[i]) {
        throw InputError("delivery '" + s.demand->points[i].id + "' does not match matrix row '" +
                         s.matrix.row_labels()[i] + "'");
      }
    }
    snap_demand(*s.demand, graph);
    const auto deliveries = s.demand->nodes();
    MatrixOptions options;
    options.engine = parse_engine(cfg.engine);
    options.direction = parse_direction(cfg.direction);
    options.threads = cfg.threads;
    for (const auto& [spec, p] : coordinate_hubs) {
      const SnapResult snap = graph.snap(p);
      if (snap.distance_m > kSnapWarnM) {
        diag << "warning: existing hub " << spec << " snapped " << snap.distance_m << " m\n";
      }
      std::string label = "existing_" + std::to_string(s.existing.size() + 1);
      while (s.matrix.find_column(label) >= 0) label += "_";
      const NodeRef hub[] = {snap.node};
      const DistanceMatrix col = build_distance_matrix(graph, deliveries, hub, options);
      s.matrix.append_column(label, col.column(0));
      s.hubs[label] = HubRecord{label, p, graph.node(snap.node).id, "existing"};
      s.existing.push_back(s.matrix.cols() - 1);
    }
  }
  if (s.existing.empty()) {
    for (const auto& [id, h] : s.hubs) {
      if (h.role == "existing") {
        if (const auto c = s.matrix.find_column(id); c >= 0) s.existing.push_back(static_cast<std::size_t>(c));
      }
    }
  }
  if (s.existing.empty()) throw InputError("no existing hubs: pass --existing col:<id> or lon,lat");
  std::sort(s.existing.begin(), s.existing.end());
  s.existing.erase(std::unique(s.existing.begin(), s.existing.end()), s.existing.end());
  return s;
}

void write_outputs(const RunConfig& cfg, const LoadedScenario& s, const SolveResult& result,
                   const MetricsReport& report, HubRole added_role, Json extra, std::ostream& diag) {
  const DistanceMatrix& m = s.matrix;
  const std::string& best_id = m.column_labels()[result.best_hub_column];
  Json doc = report.to_json();
  doc["mode"] = cfg.subcommand;
  doc["best_hub_column"] = result.best_hub_column;
  doc["best_hub_id"] = best_id;
  doc["min_cost_m"] = result.min_cost;
  doc["baseline_cost_m"] = result.baseline_cost;
  Json existing_ids = Json::array();
  for (std::size_t c : s.existing) existing_ids.push_back(m.column_labels()[c]);
  doc["existing_hub_ids"] = existing_ids;
  if (const auto it = s.hubs.find(best_id); it != s.hubs.end()) {
    doc["best_hub_position"] = {it->second.position.lon, it->second.position.lat};
  }
  doc.update(extra);
  const fs::path out(cfg.out);
  geojson::write_json(out / "report.json", doc, 2);

  std::set<std::size_t> active(result.hub_columns.begin(), result.hub_columns.end());
  if (!s.hubs.empty()) {
    std::vector<HubFeature> features;
    bool complete = true;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto it = s.hubs.find(m.column_labels()[c]);
      if (it == s.hubs.end()) {
        complete = false;
        continue;
      }
      HubRole role = HubRole::kCandidate;
      if (c == result.best_hub_column) {
        role = added_role;
      } else if (active.count(c)) {
        role = HubRole::kExisting;
      }
      features.push_back({it->first, it->second.position, role});
    }
    if (!complete) diag << "warning: some matrix columns have no coordinates; omitted from hubs.geojson\n";
    geojson::write_json(out / "hubs.geojson", hubs_layer(features));
  } else {
    diag << "note: no hub coordinates available, hubs.geojson not written\n";
  }
  if (s.demand) {
    geojson::write_json(out / "demand.geojson", demand_layer(m, s.demand->points, result.assignments));
  } else {
    diag << "note: no --deliveries given, demand.geojson not written\n";
  }
  diag << "best hub " << best_id << " (column " << result.best_hub_column << "): avg "
       << report.avg_before_km << " km -> " << report.avg_after_km << " km ("
       << round_to(report.improvement_pct, 1) << "%)\n";
}

int cmd_solve(const RunConfig& cfg, std::ostream& diag) {
  const LoadedScenario s = load_scenario(cfg, diag);
  const HubScenario scenario = HubScenario::with_remaining_candidates(s.matrix, s.existing);
  SolveOptions options;
  options.threads = cfg.threads;
  const SolveResult result = solve_conditional_1median(scenario, options);
  const auto before = best_existing_distances(scenario);
  const MetricsReport report = build_report(s.matrix, before, result, HubRole::kNew,
                                            ReportOptions{cfg.bin_km, cfg.bin_origin_km});
  write_outputs(cfg, s, result, report, HubRole::kNew, Json::object(), diag);
  write_run_json(cfg, result.scan_seconds);
  return kExitOk;
}

int cmd_relocate(const RunConfig& cfg, std::ostream& diag) {
  require(cfg.remove, "--remove");
  const LoadedScenario s = load_scenario(cfg, diag);
  const std::size_t removed = resolve_column(s.matrix, cfg.remove.starts_with("col:") ? cfg.remove : "col:" + cfg.remove);
  if (!std::binary_search(s.existing.begin(), s.existing.end(), removed)) {
    throw InputError("--remove must name an existing hub");
  }
  const HubScenario scenario = HubScenario::with_remaining_candidates(s.matrix, s.existing);
  std::vector<std::size_t> keep, pool = scenario.candidates();
  for (std::size_t c : s.existing) {
    if (c != removed) keep.push_back(c);
  }
  pool.push_back(removed);
  SolveOptions options;
  options.threads = cfg.threads;
  const SolveResult result = relocate(scenario, keep, pool, options);
  const auto before = best_existing_distances(scenario);
  const MetricsReport report = build_report(s.matrix, before, result, HubRole::kRelocated,
                                            ReportOptions{cfg.bin_km, cfg.bin_origin_km});
  LoadedScenario shown = s;
  shown.existing = keep;
  Json extra{{"removed_hub_id", s.matrix.column_labels()[removed]},
             {"stay_put", result.best_hub_column == removed},
             {"original_existing_hub_ids", Json::array()}};
  for (std::size_t c : s.existing) extra["original_existing_hub_ids"].push_back(s.matrix.column_labels()[c]);
  write_outputs(cfg, shown, result, report, HubRole::kRelocated, extra, diag);
  write_run_json(cfg, result.scan_seconds);
  return kExitOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& diag) {
  require(cfg.add, "--add");
  const LoadedScenario s = load_scenario(cfg, diag);
  const std::size_t added = resolve_column(s.matrix, cfg.add.starts_with("col:") ? cfg.add : "col:" + cfg.add);
  const HubScenario scenario(s.matrix, s.existing, {added});
  const SolveResult result = solve_conditional_1median(scenario);
  const auto before = best_existing_distances(scenario);
  const MetricsReport report = build_report(s.matrix, before, result, HubRole::kNew,
                                            ReportOptions{cfg.bin_km, cfg.bin_origin_km});
  write_outputs(cfg, s, result, report, HubRole::kNew, Json::object(), diag);
  write_run_json(cfg, result.scan_seconds);
  return kExitOk;
}

void add_graph_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--graph-nodes", cfg.graph_nodes, "Road graph nodes CSV (node_id,lon,lat)");
  cmd->add_option("--graph-edges", cfg.graph_edges, "Road graph edges CSV (from_id,to_id,length_m,oneway)");
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out, "Output directory");
  cmd->add_option("--seed", cfg.seed, "Random seed");
  cmd->add_option("--threads", cfg.threads, "Worker thread cap (0 = all cores)");
}

void add_routing_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--engine", cfg.engine, "Shortest path engine")->check(CLI::IsMember({"dijkstra", "ch"}));
  cmd->add_option("--direction", cfg.direction, "Distance direction")
      ->check(CLI::IsMember({"hub-to-delivery", "delivery-to-hub"}));
}

void add_solve_flags(CLI::App* cmd, RunConfig& cfg) {
  add_graph_flags(cmd, cfg);
  add_common_flags(cmd, cfg);
  add_routing_flags(cmd, cfg);
  cmd->add_option("--matrix", cfg.matrix, "Distance matrix CSV");
  cmd->add_option("--hubs", cfg.hubs, "Hub coordinates CSV (defaults to hubs.csv next to the matrix)");
  cmd->add_option("--deliveries", cfg.deliveries, "Demand CSV matching the matrix rows");
  cmd->add_option("--existing", cfg.existing, "Existing hub: col:<id> or lon,lat (repeatable)");
  cmd->add_flag("--hubs-as-rows", cfg.hubs_as_rows, "Matrix file has one row per hub");
  cmd->add_option("--bin-km", cfg.bin_km, "Histogram bin width in km");
  cmd->add_option("--bin-origin-km", cfg.bin_origin_km, "Histogram first regular edge in km");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& diag) {
  RunConfig cfg;
  CLI::App app{"Road-network conditional 1-median hub placement"};
  app.set_version_flag("--version", HUBLOC_VERSION);
  app.require_subcommand(1);

  auto* gen_candidates = app.add_subcommand("gen-candidates", "Candidate hub lattice snapped to the road graph");
  add_graph_flags(gen_candidates, cfg);
  add_common_flags(gen_candidates, cfg);
  gen_candidates->add_option("--region", cfg.region, "Region GeoJSON (Polygon or MultiPolygon)");
  gen_candidates->add_option("--spacing-m", cfg.spacing_m, "Lattice spacing in meters");
  gen_candidates->add_option("--max-snap-m", cfg.max_snap_m, "Drop lattice points further from the graph");

  auto* gen_demand = app.add_subcommand("gen-demand", "Demand points from deliveries or population weights");
  add_graph_flags(gen_demand, cfg);
  add_common_flags(gen_demand, cfg);
  gen_demand->add_option("--deliveries", cfg.deliveries, "Deliveries CSV (delivery_id,lon,lat)");
  gen_demand->add_option("--population", cfg.population, "Population weights GeoJSON");
  gen_demand->add_option("--total", cfg.total, "Population points to generate");
  gen_demand->add_option("--sample", cfg.sample, "Sample size drawn from the deliveries");

  auto* build_matrix = app.add_subcommand("build-matrix", "Deliveries x hubs road distance matrix");
  add_graph_flags(build_matrix, cfg);
  add_common_flags(build_matrix, cfg);
  add_routing_flags(build_matrix, cfg);
  build_matrix->add_option("--deliveries", cfg.deliveries, "Demand CSV");
  build_matrix->add_option("--candidates", cfg.candidates, "Candidate CSV from gen-candidates");
  build_matrix->add_option("--existing", cfg.existing, "Existing hub lon,lat (repeatable)");

  auto* solve = app.add_subcommand("solve", "Best additional hub given the existing ones");
  add_solve_flags(solve, cfg);

  auto* reloc = app.add_subcommand("relocate", "Move one existing hub to its best position");
  add_solve_flags(reloc, cfg);
  reloc->add_option("--remove", cfg.remove, "Existing hub to relocate: col:<id>");

  auto* report = app.add_subcommand("report", "Metrics for adding a given hub");
  add_solve_flags(report, cfg);
  report->add_option("--add", cfg.add, "Hub to add: col:<id>");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    diag << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    diag << HUBLOC_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (cfg.subcommand == "gen-candidates") return cmd_gen_candidates(cfg, diag);
    if (cfg.subcommand == "gen-demand") return cmd_gen_demand(cfg, diag);
    if (cfg.subcommand == "build-matrix") return cmd_build_matrix(cfg, diag);
    if (cfg.subcommand == "solve") return cmd_solve(cfg, diag);
    if (cfg.subcommand == "relocate") return cmd_relocate(cfg, diag);
    return cmd_report(cfg, diag);
  } catch (const InfeasibleError& e) {
    diag << "error: " << e.what() << "; unreachable deliveries:";
    for (const std::string& id : e.delivery_ids()) diag << ' ' << id;
    diag << '\n';
    return kExitInfeasible;
  } catch (const InputError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const StaleIndexError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cerr);
}

}  // namespace hubloc::cli
