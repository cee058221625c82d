#include "hubloc/demand.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include "hubloc/csv.hpp"
#include "hubloc/error.hpp"
#include "hubloc/rng.hpp"

namespace hubloc {

namespace {

constexpr int kMaxConsecutiveRejections = 10'000;

}  // namespace

std::vector<NodeRef> DemandSet::nodes() const {
  std::vector<NodeRef> out;
  out.reserve(points.size());
  for (const DemandPoint& p : points) {
    if (!p.node) throw InputError("demand point '" + p.id + "' is not snapped to the graph");
    out.push_back(*p.node);
  }
  return out;
}

DemandSet read_deliveries(std::istream& in) {
  csv::Reader reader(in);
  reader.expect_header(kDemandHeader);
  DemandSet set;
  set.source = DemandSource::kDeliveries;
  while (auto row = reader.next()) {
    if (row->size() != 3) {
      ++set.skipped;
      continue;
    }
    try {
      const GeoPoint p{csv::parse_double((*row)[1], "lon", reader.line()),
                       csv::parse_double((*row)[2], "lat", reader.line())};
      if (!p.valid() || (*row)[0].empty()) {
        ++set.skipped;
        continue;
      }
      set.points.push_back(DemandPoint{(*row)[0], p, std::nullopt, {}});
    } catch (const InputError&) {
      ++set.skipped;
    }
  }
  if (set.points.empty()) throw InputError("empty demand set");
  return set;
}

DemandSet read_deliveries(const std::filesystem::path& path) {
  auto in = csv::open_input(path);
  return read_deliveries(in);
}

DemandSet load_deliveries(std::istream& in, const RoadGraph& graph) {
  DemandSet set = read_deliveries(in);
  snap_demand(set, graph);
  return set;
}

double snap_demand(DemandSet& demand, const RoadGraph& graph) {
  double worst = 0.0;
  for (DemandPoint& p : demand.points) {
    const SnapResult s = graph.snap(p.position);
    p.node = s.node;
    worst = std::max(worst, s.distance_m);
  }
  return worst;
}

DemandSet sample_demand(const DemandSet& demand, std::size_t n, std::uint64_t seed) {
  const std::size_t size = demand.points.size();
  if (n < 1 || n > size) {
    throw InputError("sample size " + std::to_string(n) + " outside [1, " + std::to_string(size) + "]");
  }
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(size - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n);
  std::sort(idx.begin(), idx.end());

  DemandSet out;
  out.source = demand.source;
  out.points.reserve(n);
  for (std::size_t i : idx) out.points.push_back(demand.points[i]);
  return out;
}

std::vector<std::pair<std::string, long long>> scale_weights(
    std::span<const std::pair<std::string, long long>> raw_counts, long long total) {
  if (total < 1) throw InputError("total must be at least 1");
  if (raw_counts.empty()) throw InputError("no weights given");
  long double sum = 0;
  for (const auto& [name, count] : raw_counts) {
    if (count < 0) throw InputError("negative weight for '" + name + "'");
    sum += static_cast<long double>(count);
  }
  if (sum <= 0) throw InputError("all weights are zero");

  std::vector<std::pair<std::string, long long>> out;
  std::vector<long double> remainder;
  long long assigned = 0;
  for (const auto& [name, count] : raw_counts) {
    const long double exact = static_cast<long double>(count) * static_cast<long double>(total) / sum;
    const auto whole = static_cast<long long>(std::floor(exact));
    out.emplace_back(name, whole);
    remainder.push_back(exact - static_cast<long double>(whole));
    assigned += whole;
  }
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++out[order[k % order.size()]].second;
  return out;
}

DemandSet sample_population_points(const RegionWeights& weights, std::uint64_t seed) {
  DemandSet set;
  set.source = DemandSource::kPopulation;
  Rng rng(seed);
  std::size_t next_id = 0;
  for (const RegionWeight& region : weights) {
    if (region.count < 0) throw InputError("negative count for region '" + region.name + "'");
    if (region.count == 0) continue;
    if (region.polygon.exterior.size() < 3 || ring_area_deg2(region.polygon.exterior) == 0.0) {
      throw InputError("region '" + region.name + "' has zero area but a positive count");
    }
    const BoundingBox box = bounding_box(region.polygon);
    for (long long k = 0; k < region.count; ++k) {
      int rejections = 0;
      while (true) {
        const double lon = rng.uniform(box.min_lon, box.max_lon);
        const double lat = rng.uniform(box.min_lat, box.max_lat);
        const GeoPoint p{lon, lat};
        if (point_in_polygon(p, region.polygon)) {
          set.points.push_back(DemandPoint{"p" + std::to_string(next_id++), p, std::nullopt, region.name});
          break;
        }
        if (++rejections >= kMaxConsecutiveRejections) {
          throw InputError("region '" + region.name + "': rejection sampling gave up after " +
                           std::to_string(kMaxConsecutiveRejections) + " attempts");
        }
      }
    }
  }
  if (set.points.empty()) throw InputError("empty demand set");
  return set;
}

DemandSet generate_population_demand(const RegionWeights& weights, const RoadGraph& graph,
                                     std::uint64_t seed) {
  DemandSet set = sample_population_points(weights, seed);
  snap_demand(set, graph);
  return set;
}

void save_demand(const DemandSet& demand, std::ostream& out) {
  out << kDemandHeader << '\n';
  for (const DemandPoint& p : demand.points) {
    out << p.id << ',' << csv::format_double(p.position.lon) << ','
        << csv::format_double(p.position.lat) << '\n';
  }
}

void save_demand(const DemandSet& demand, const std::filesystem::path& path) {
  auto out = csv::open_output(path);
  save_demand(demand, out);
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace hubloc
