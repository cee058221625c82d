#include "hubloc/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hubloc/error.hpp"

namespace hubloc {

double average_delivery_km(double total_cost_m, std::size_t deliveries) {
  if (deliveries == 0) throw InputError("average over zero deliveries");
  return total_cost_m / (1000.0 * static_cast<double>(deliveries));
}

double improvement_pct(double before_km, double after_km) {
  if (!(before_km > 0.0)) throw InputError("improvement needs a positive baseline");
  return 100.0 * (before_km - after_km) / before_km;
}

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

std::size_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::optional<std::size_t> Histogram::modal_bin() const {
  const auto it = std::max_element(counts.begin(), counts.end());
  if (it == counts.end() || *it == 0) return std::nullopt;
  return static_cast<std::size_t>(it - counts.begin());
}

std::pair<double, std::optional<double>> Histogram::bin_range(std::size_t k) const {
  if (k + 1 < edges_km.size()) return {edges_km[k], edges_km[k + 1]};
  return {edges_km[k], std::nullopt};
}

Histogram distance_histogram(std::span<const double> distances_m, double bin_width_km,
                             double origin_km, std::optional<std::size_t> regular_bins) {
  if (!(bin_width_km > 0.0)) throw InputError("bin width must be positive");
  if (origin_km < 0.0) throw InputError("bin origin must be non-negative");
  std::size_t bins = 1;
  if (regular_bins) {
    bins = std::max<std::size_t>(1, *regular_bins);
  } else {
    double max_km = 0.0;
    for (double d : distances_m) {
      if (std::isfinite(d)) max_km = std::max(max_km, d / 1000.0);
    }
    if (max_km >= origin_km) bins = static_cast<std::size_t>(std::floor((max_km - origin_km) / bin_width_km)) + 1;
  }

  Histogram h;
  if (origin_km > 0.0) h.edges_km.push_back(0.0);
  for (std::size_t k = 0; k <= bins; ++k) h.edges_km.push_back(origin_km + static_cast<double>(k) * bin_width_km);
  h.counts.assign(h.edges_km.size(), 0);
  const std::size_t first_regular = origin_km > 0.0 ? 1 : 0;
  for (double d : distances_m) {
    const double km = d / 1000.0;
    std::size_t k;
    if (!std::isfinite(km)) {
      k = h.counts.size() - 1;
    } else if (km < origin_km) {
      k = 0;
    } else {
      const auto step = static_cast<std::size_t>(std::floor((km - origin_km) / bin_width_km));
      k = std::min(first_regular + step, h.counts.size() - 1);
      // Guard the floor against rounding at an exact edge.
      while (k > first_regular && km < h.edges_km[k]) --k;
      while (k + 1 < h.counts.size() && km >= h.edges_km[k + 1]) ++k;
    }
    ++h.counts[k];
  }
  return h;
}

const char* to_string(HubRole role) {
  switch (role) {
    case HubRole::kExisting:
      return "existing";
    case HubRole::kNew:
      return "new";
    case HubRole::kRelocated:
      return "relocated";
    case HubRole::kCandidate:
      return "candidate";
  }
  return "candidate";
}

namespace {

geojson::Json bin_json(const Histogram& h, std::optional<std::size_t> bin) {
  if (!bin) return nullptr;
  const auto [lo, hi] = h.bin_range(*bin);
  return geojson::Json::array({lo, hi ? geojson::Json(*hi) : geojson::Json(nullptr)});
}

}  // namespace

MetricsReport build_report(const DistanceMatrix& matrix, std::span<const double> before_m,
                           const SolveResult& after, HubRole added_role, const ReportOptions& options) {
  if (before_m.size() != matrix.rows() || after.assignments.size() != matrix.rows()) {
    throw InputError("report inputs do not match the matrix row count");
  }
  MetricsReport r;
  r.delivery_count = matrix.rows();
  r.total_cost_m = after.min_cost;
  const double before_total = std::accumulate(before_m.begin(), before_m.end(), 0.0);
  r.avg_before_km = average_delivery_km(before_total, r.delivery_count);
  r.avg_after_km = average_delivery_km(after.min_cost, r.delivery_count);
  r.improvement_pct = improvement_pct(r.avg_before_km, r.avg_after_km);
  r.solve_runtime_s = after.scan_seconds;

  for (std::size_t k = 0; k < after.hub_columns.size(); ++k) {
    const std::size_t col = after.hub_columns[k];
    r.cluster_sizes.push_back({matrix.column_labels()[col],
                               col == after.best_hub_column ? added_role : HubRole::kExisting,
                               after.cluster_sizes[k]});
  }

  std::vector<double> after_m;
  after_m.reserve(after.assignments.size());
  for (const Assignment& a : after.assignments) after_m.push_back(a.distance_m);
  r.histogram_before = distance_histogram(before_m, options.bin_width_km, options.bin_origin_km);
  const std::size_t regular = r.histogram_before.edges_km.size() - (options.bin_origin_km > 0.0 ? 2 : 1);
  r.histogram_after = distance_histogram(after_m, options.bin_width_km, options.bin_origin_km, regular);
  r.modal_bin_before = r.histogram_before.modal_bin();
  r.modal_bin_after = r.histogram_after.modal_bin();
  return r;
}

geojson::Json MetricsReport::to_json() const {
  using Json = geojson::Json;
  Json clusters = Json::array();
  for (const ClusterSize& c : cluster_sizes) {
    clusters.push_back({{"hub_id", c.hub_id}, {"role", to_string(c.role)}, {"deliveries", c.deliveries}});
  }
  return Json{
      {"avg_before_km", avg_before_km},
      {"avg_after_km", avg_after_km},
      {"improvement_pct", improvement_pct},
      {"improvement_pct_display", round_to(improvement_pct, 1)},
      {"total_cost_m", total_cost_m},
      {"delivery_count", delivery_count},
      {"cluster_sizes", clusters},
      {"histogram",
       {{"bin_edges_km", histogram_after.edges_km},
        {"counts", histogram_after.counts},
        {"counts_before", histogram_before.counts}}},
      {"modal_bin_before", bin_json(histogram_before, modal_bin_before)},
      {"modal_bin_after", bin_json(histogram_after, modal_bin_after)},
      {"solve_runtime_s", solve_runtime_s},
  };
}

geojson::Json hubs_layer(std::span<const HubFeature> hubs) {
  std::vector<geojson::Json> features;
  for (const HubFeature& h : hubs) {
    features.push_back(geojson::feature(geojson::point_geometry(h.position),
                                        {{"hub_id", h.id}, {"role", to_string(h.role)}}));
  }
  return geojson::feature_collection(std::move(features));
}

geojson::Json demand_layer(const DistanceMatrix& matrix, std::span<const DemandPoint> demand,
                           std::span<const Assignment> assignments) {
  if (demand.size() != matrix.rows() || assignments.size() != matrix.rows()) {
    throw InputError("demand layer inputs do not match the matrix row count");
  }
  std::vector<geojson::Json> features;
  features.reserve(demand.size());
  for (std::size_t i = 0; i < demand.size(); ++i) {
    if (demand[i].id != matrix.row_labels()[i]) {
      throw InputError("demand point '" + demand[i].id + "' does not match matrix row '" +
                       matrix.row_labels()[i] + "'");
    }
    features.push_back(geojson::feature(
        geojson::point_geometry(demand[i].position),
        {{"delivery_id", demand[i].id},
         {"assigned_hub", matrix.column_labels()[assignments[i].hub_column]},
         {"distance_m", assignments[i].distance_m}}));
  }
  return geojson::feature_collection(std::move(features));
}

void export_geojson(std::span<const HubFeature> hubs, const DistanceMatrix& matrix,
                    std::span<const DemandPoint> demand, std::span<const Assignment> assignments,
                    const std::filesystem::path& out_dir) {
  geojson::write_json(out_dir / "hubs.geojson", hubs_layer(hubs));
  geojson::write_json(out_dir / "demand.geojson", demand_layer(matrix, demand, assignments));
}

}  // namespace hubloc
