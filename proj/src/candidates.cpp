#include "hubloc/candidates.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <unordered_set>

#include "hubloc/csv.hpp"
#include "hubloc/error.hpp"

namespace hubloc {

std::vector<GeoPoint> generate_grid(std::span<const GeoPolygon> region, double spacing_m) {
  if (!(spacing_m > 0.0) || !std::isfinite(spacing_m)) throw InputError("spacing must be positive");
  if (region.empty()) return {};
  const BoundingBox box = bounding_box(region);
  const double mean_lat = (box.min_lat + box.max_lat) / 2.0;
  const double lat_step = spacing_m / kMetersPerDegree;
  const double lon_step = spacing_m / (kMetersPerDegree * std::cos(mean_lat * std::numbers::pi / 180.0));

  // Counts are computed up front so the lattice is anchored exactly and no
  // accumulated floating point drift adds or loses a row.
  const auto rows = static_cast<long long>(std::floor((box.max_lat - box.min_lat) / lat_step + 1e-9)) + 1;
  const auto cols = static_cast<long long>(std::floor((box.max_lon - box.min_lon) / lon_step + 1e-9)) + 1;

  std::vector<GeoPoint> out;
  for (long long r = 0; r < rows; ++r) {
    const double lat = box.min_lat + static_cast<double>(r) * lat_step;
    for (long long c = 0; c < cols; ++c) {
      const GeoPoint p{box.min_lon + static_cast<double>(c) * lon_step, lat};
      if (point_in_region(p, region)) out.push_back(p);
    }
  }
  return out;
}

std::vector<GeoPoint> generate_grid(const GeoPolygon& region, double spacing_m) {
  return generate_grid(std::span<const GeoPolygon>(&region, 1), spacing_m);
}

CandidateSet snap_candidates(const RoadGraph& graph, std::span<const GeoPoint> raw,
                             double max_snap_m) {
  CandidateSet set;
  std::unordered_set<std::uint32_t> used;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const SnapResult snap = graph.snap(raw[k]);
    if (snap.distance_m > max_snap_m) {
      ++set.dropped_far;
      continue;
    }
    if (!used.insert(snap.node.index).second) {
      ++set.dropped_duplicate;
      continue;
    }
    set.points.push_back(Candidate{"c" + std::to_string(k), raw[k], snap.node, snap.distance_m});
  }
  return set;
}

void save_candidates(const CandidateSet& set, const RoadGraph& graph, std::ostream& out) {
  out << kCandidatesHeader << '\n';
  for (const Candidate& c : set.points) {
    out << c.id << ',' << csv::format_double(c.position.lon) << ','
        << csv::format_double(c.position.lat) << ',' << graph.node(c.node).id << ','
        << csv::format_double(c.snap_m) << '\n';
  }
}

void save_candidates(const CandidateSet& set, const RoadGraph& graph,
                     const std::filesystem::path& path) {
  auto out = csv::open_output(path);
  save_candidates(set, graph, out);
  if (!out) throw InputError("failed writing " + path.string());
}

std::vector<CandidateRow> load_candidates(std::istream& in) {
  csv::Reader reader(in);
  reader.expect_header(kCandidatesHeader);
  std::vector<CandidateRow> rows;
  while (auto row = reader.next()) {
    if (row->size() != 5) {
      throw InputError("candidates row " + std::to_string(reader.line()) + ": expected 5 fields");
    }
    rows.push_back(CandidateRow{(*row)[0],
                                GeoPoint{csv::parse_double((*row)[1], "lon", reader.line()),
                                         csv::parse_double((*row)[2], "lat", reader.line())},
                                (*row)[3], csv::parse_double((*row)[4], "snap_m", reader.line())});
  }
  return rows;
}

std::vector<CandidateRow> load_candidates(const std::filesystem::path& path) {
  auto in = csv::open_input(path);
  return load_candidates(in);
}

}  // namespace hubloc
