#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hubloc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInfeasible = 3;

/// Snap distance above which a warning is printed.
inline constexpr double kSnapWarnM = 500.0;

/// Everything a run was configured with; persisted to run.json.
struct RunConfig {
  std::string subcommand;
  std::string graph_nodes, graph_edges;
  std::string region;
  double spacing_m = 1300.0;
  double max_snap_m = 650.0;
  std::string deliveries, population, candidates, matrix, hubs;
  long long total = 20000;
  long long sample = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> existing;
  std::string remove, add;
  std::string engine = "dijkstra";
  std::string direction = "hub-to-delivery";
  bool hubs_as_rows = false;
  double bin_km = 2.0;
  double bin_origin_km = 1.0;
  std::string out = ".";
  unsigned threads = 0;
};

/// Runs the command line; returns the process exit code. Warnings and
/// errors go to `diag`, data only to files under --out.
int run(const std::vector<std::string>& args, std::ostream& diag);
int run(int argc, char** argv);

}  // namespace hubloc::cli
