#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hubloc/demand.hpp"
#include "hubloc/geojson.hpp"
#include "hubloc/solver.hpp"

namespace hubloc {

/// Mean distance per delivery in km.
double average_delivery_km(double total_cost_m, std::size_t deliveries);

/// 100 * (before - after) / before. Throws InputError unless before > 0.
double improvement_pct(double before_km, double after_km);

/// Rounds half away from zero to `decimals` places (display only).
double round_to(double value, int decimals);

/// Distance histogram in km. Bin k covers [edges_km[k], edges_km[k+1]); the
/// last bin is open-ended. With a positive origin the first bin is the
/// underflow bin [0, origin).
struct Histogram {
  std::vector<double> edges_km;
  std::vector<std::size_t> counts;

  std::size_t total() const;
  /// Fullest bin, lowest index on ties; nullopt when every count is zero.
  std::optional<std::size_t> modal_bin() const;
  /// [lo, hi) of bin k in km; hi is nullopt for the open last bin.
  std::pair<double, std::optional<double>> bin_range(std::size_t k) const;
};

/// Bins `distances_m`. Without `regular_bins`, enough regular bins are
/// created to hold the largest finite distance. Non-finite values go to the
/// open last bin.
Histogram distance_histogram(std::span<const double> distances_m, double bin_width_km = 2.0,
                             double origin_km = 1.0, std::optional<std::size_t> regular_bins = {});

enum class HubRole { kExisting, kNew, kRelocated, kCandidate };
const char* to_string(HubRole role);

struct ClusterSize {
  std::string hub_id;
  HubRole role = HubRole::kExisting;
  std::size_t deliveries = 0;
};

struct ReportOptions {
  double bin_width_km = 2.0;
  double bin_origin_km = 1.0;
};

struct MetricsReport {
  double avg_before_km = 0.0;
  double avg_after_km = 0.0;
  double improvement_pct = 0.0;
  double total_cost_m = 0.0;
  std::size_t delivery_count = 0;
  std::vector<ClusterSize> cluster_sizes;
  Histogram histogram_before;
  Histogram histogram_after;  // same edges as histogram_before
  std::optional<std::size_t> modal_bin_before;
  std::optional<std::size_t> modal_bin_after;
  double solve_runtime_s = 0.0;

  geojson::Json to_json() const;
};

/// `before_m` holds each delivery's distance before the change (the
/// existing-hub baseline). `added_role` labels the chosen column.
MetricsReport build_report(const DistanceMatrix& matrix, std::span<const double> before_m,
                           const SolveResult& after, HubRole added_role,
                           const ReportOptions& options = {});

struct HubFeature {
  std::string id;
  GeoPoint position;
  HubRole role = HubRole::kCandidate;
};

/// Point layer of hubs with `hub_id` and `role` properties.
geojson::Json hubs_layer(std::span<const HubFeature> hubs);

/// Point layer of deliveries with `delivery_id`, `assigned_hub` and
/// `distance_m`. demand[i] must describe matrix row i.
geojson::Json demand_layer(const DistanceMatrix& matrix, std::span<const DemandPoint> demand,
                           std::span<const Assignment> assignments);

/// Writes hubs.geojson and demand.geojson into `out_dir`.
void export_geojson(std::span<const HubFeature> hubs, const DistanceMatrix& matrix,
                    std::span<const DemandPoint> demand, std::span<const Assignment> assignments,
                    const std::filesystem::path& out_dir);

}  // namespace hubloc
