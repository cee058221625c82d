#include "hubloc/road_graph.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "hubloc/csv.hpp"
#include "hubloc/error.hpp"

namespace hubloc {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t word) {
  for (int i = 0; i < 8; ++i) {
    h ^= (word >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

void build_csr(std::size_t n, const std::vector<RoadEdge>& edges, bool reverse,
               std::vector<std::uint32_t>& offsets, std::vector<Arc>& arcs) {
  offsets.assign(n + 1, 0);
  for (const RoadEdge& e : edges) ++offsets[(reverse ? e.to : e.from) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  arcs.resize(edges.size());
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const RoadEdge& e : edges) {
    const std::uint32_t tail = reverse ? e.to : e.from;
    const std::uint32_t head = reverse ? e.from : e.to;
    arcs[cursor[tail]++] = Arc{head, e.length_m};
  }
}

}  // namespace

RoadGraph::RoadGraph(std::vector<RoadNode> nodes, std::vector<RoadEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (nodes_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("too many nodes");
  }
  index_by_id_.reserve(nodes_.size());
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].position.valid()) {
      throw InputError("node '" + nodes_[i].id + "' has invalid coordinates");
    }
    if (!index_by_id_.emplace(nodes_[i].id, i).second) {
      throw InputError("duplicate node_id '" + nodes_[i].id + "'");
    }
  }
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const RoadEdge& e = edges_[k];
    if (e.from >= nodes_.size() || e.to >= nodes_.size()) {
      throw InputError("edge " + std::to_string(k) + " references an unknown node");
    }
    if (!(e.length_m > 0.0) || !std::isfinite(e.length_m)) {
      throw InputError("edge " + std::to_string(k) + ": non-positive edge length");
    }
  }
  build_csr(nodes_.size(), edges_, false, out_offsets_, out_arcs_);
  build_csr(nodes_.size(), edges_, true, in_offsets_, in_arcs_);

  std::uint64_t h = kFnvOffset;
  fnv_mix(h, nodes_.size());
  fnv_mix(h, edges_.size());
  for (const RoadEdge& e : edges_) {
    fnv_mix(h, (std::uint64_t{e.from} << 32) | e.to);
    fnv_mix(h, std::bit_cast<std::uint64_t>(e.length_m));
  }
  fingerprint_ = h;
}

std::span<const Arc> RoadGraph::out_arcs(NodeRef n) const noexcept {
  return {out_arcs_.data() + out_offsets_[n.index], out_arcs_.data() + out_offsets_[n.index + 1]};
}

std::span<const Arc> RoadGraph::in_arcs(NodeRef n) const noexcept {
  return {in_arcs_.data() + in_offsets_[n.index], in_arcs_.data() + in_offsets_[n.index + 1]};
}

std::optional<NodeRef> RoadGraph::find(const std::string& node_id) const {
  const auto it = index_by_id_.find(node_id);
  if (it == index_by_id_.end()) return std::nullopt;
  return NodeRef{it->second};
}

double RoadGraph::total_length_m() const noexcept {
  double total = 0.0;
  for (const RoadEdge& e : edges_) total += e.length_m;
  return total;
}

SnapResult RoadGraph::snap(const GeoPoint& pt) const {
  if (nodes_.empty()) throw InputError("cannot snap to an empty graph");
  SnapResult best{NodeRef{0}, haversine_m(pt, nodes_[0].position)};
  for (std::uint32_t i = 1; i < nodes_.size(); ++i) {
    const double d = haversine_m(pt, nodes_[i].position);
    if (d < best.distance_m) best = SnapResult{NodeRef{i}, d};
  }
  return best;
}

SnapResult snap_to_node(const RoadGraph& graph, const GeoPoint& pt) { return graph.snap(pt); }

RoadGraph load_graph(std::istream& nodes_csv, std::istream& edges_csv) {
  std::vector<RoadNode> nodes;
  std::unordered_map<std::string, std::uint32_t> ids;
  {
    csv::Reader reader(nodes_csv);
    reader.expect_header(kNodesHeader);
    while (auto row = reader.next()) {
      if (row->size() != 3) {
        throw InputError("nodes row " + std::to_string(reader.line()) + ": expected 3 fields");
      }
      RoadNode node{(*row)[0],
                    GeoPoint{csv::parse_double((*row)[1], "lon", reader.line()),
                             csv::parse_double((*row)[2], "lat", reader.line())}};
      if (!ids.emplace(node.id, static_cast<std::uint32_t>(nodes.size())).second) {
        throw InputError("duplicate node_id '" + node.id + "'");
      }
      nodes.push_back(std::move(node));
    }
  }

  std::vector<RoadEdge> edges;
  csv::Reader reader(edges_csv);
  reader.expect_header(kEdgesHeader);
  while (auto row = reader.next()) {
    const std::string where = "edges row " + std::to_string(reader.line());
    if (row->size() != 4) throw InputError(where + ": expected 4 fields");
    const auto from = ids.find((*row)[0]);
    const auto to = ids.find((*row)[1]);
    if (from == ids.end() || to == ids.end()) {
      throw InputError(where + ": edge references unknown node_id '" +
                       (from == ids.end() ? (*row)[0] : (*row)[1]) + "'");
    }
    const double length = csv::parse_double((*row)[2], "length_m", reader.line());
    if (!(length > 0.0) || !std::isfinite(length)) {
      throw InputError(where + ": non-positive edge length");
    }
    const long long oneway = csv::parse_int((*row)[3], "oneway", reader.line());
    if (oneway != 0 && oneway != 1) throw InputError(where + ": oneway must be 0 or 1");
    edges.push_back(RoadEdge{from->second, to->second, length});
    if (oneway == 0) edges.push_back(RoadEdge{to->second, from->second, length});
  }
  return RoadGraph(std::move(nodes), std::move(edges));
}

RoadGraph load_graph(const std::filesystem::path& nodes_csv,
                     const std::filesystem::path& edges_csv) {
  auto nodes_in = csv::open_input(nodes_csv);
  auto edges_in = csv::open_input(edges_csv);
  return load_graph(nodes_in, edges_in);
}

void save_graph(const RoadGraph& graph, std::ostream& nodes_csv, std::ostream& edges_csv) {
  nodes_csv << kNodesHeader << '\n';
  for (const RoadNode& n : graph.nodes()) {
    nodes_csv << n.id << ',' << csv::format_double(n.position.lon) << ','
              << csv::format_double(n.position.lat) << '\n';
  }
  edges_csv << kEdgesHeader << '\n';
  for (const RoadEdge& e : graph.edges()) {
    edges_csv << graph.nodes()[e.from].id << ',' << graph.nodes()[e.to].id << ','
              << csv::format_double(e.length_m) << ",1\n";
  }
}

}  // namespace hubloc
