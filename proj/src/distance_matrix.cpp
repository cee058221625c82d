#include "hubloc/distance_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <thread>

#include "hubloc/csv.hpp"
#include "hubloc/error.hpp"

namespace hubloc {

DistanceMatrix::DistanceMatrix(std::vector<std::string> row_labels,
                               std::vector<std::string> column_labels)
    : row_labels_(std::move(row_labels)),
      column_labels_(std::move(column_labels)),
      values_(row_labels_.size() * column_labels_.size(), kUnreachable) {}

std::ptrdiff_t DistanceMatrix::find_column(const std::string& label) const {
  const auto it = std::find(column_labels_.begin(), column_labels_.end(), label);
  return it == column_labels_.end() ? -1 : it - column_labels_.begin();
}

void DistanceMatrix::append_column(std::string label, std::span<const double> values) {
  if (values.size() != rows()) throw InputError("appended column has wrong length");
  column_labels_.push_back(std::move(label));
  values_.insert(values_.end(), values.begin(), values.end());
}

DistanceMatrix DistanceMatrix::scaled(double factor) const {
  DistanceMatrix out = *this;
  for (double& v : out.values_) {
    if (std::isfinite(v)) v *= factor;
  }
  return out;
}

DistanceMatrix build_distance_matrix(const RoadGraph& graph, std::span<const NodeRef> deliveries,
                                     std::span<const NodeRef> hubs, const MatrixOptions& options,
                                     std::vector<std::string> delivery_labels,
                                     std::vector<std::string> hub_labels) {
  if (deliveries.empty() || hubs.empty()) {
    throw InputError("distance matrix needs at least one delivery and one hub");
  }
  for (NodeRef n : deliveries) {
    if (!graph.contains(n)) throw InputError("delivery node out of range");
  }
  for (NodeRef n : hubs) {
    if (!graph.contains(n)) throw InputError("hub node out of range");
  }
  if (delivery_labels.empty()) {
    for (NodeRef n : deliveries) delivery_labels.push_back(graph.node(n).id);
  }
  if (hub_labels.empty()) {
    for (NodeRef n : hubs) hub_labels.push_back(graph.node(n).id);
  }
  if (delivery_labels.size() != deliveries.size() || hub_labels.size() != hubs.size()) {
    throw InputError("label count does not match node count");
  }

  std::optional<ContractionHierarchy> owned;
  const ContractionHierarchy* ch = nullptr;
  if (options.engine == RoutingEngine::kContractionHierarchy) {
    if (options.hierarchy != nullptr) {
      options.hierarchy->check_fresh(graph);
      ch = options.hierarchy;
    } else {
      owned = ContractionHierarchy::build(graph, options.ch_options);
      ch = &*owned;
    }
  }

  // Hub is the search source for hub->delivery; the reverse search from the
  // hub gives delivery->hub distances.
  const SearchDirection search = options.direction == MatrixDirection::kHubToDelivery
                                     ? SearchDirection::kForward
                                     : SearchDirection::kReverse;

  DistanceMatrix m(std::move(delivery_labels), std::move(hub_labels));
  auto fill_column = [&](std::size_t j) {
    std::span<double> col = m.column(j);
    if (ch != nullptr) {
      const std::vector<double> all = ch->one_to_all(hubs[j], search);
      for (std::size_t i = 0; i < deliveries.size(); ++i) col[i] = all[deliveries[i].index];
    } else {
      const std::vector<double> d = dijkstra_one_to_many(graph, hubs[j], deliveries, search);
      std::copy(d.begin(), d.end(), col.begin());
    }
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, hubs.size()));
  if (threads <= 1) {
    for (std::size_t j = 0; j < hubs.size(); ++j) fill_column(j);
    return m;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t j = next++; j < hubs.size(); j = next++) fill_column(j);
    });
  }
  workers.clear();
  return m;
}

void save_matrix(const DistanceMatrix& m, std::ostream& out) {
  out << "delivery_id";
  for (const std::string& label : m.column_labels()) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << m.row_labels()[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << ',';
      const double v = m.at(i, j);
      if (std::isfinite(v)) out << csv::format_double(v);
    }
    out << '\n';
  }
}

void save_matrix(const DistanceMatrix& m, const std::filesystem::path& path) {
  auto out = csv::open_output(path);
  save_matrix(m, out);
  if (!out) throw InputError("failed writing " + path.string());
}

DistanceMatrix load_matrix(std::istream& in, MatrixLayout layout) {
  csv::Reader reader(in);
  std::vector<std::string> header = reader.header();
  const std::string expected_first =
      layout == MatrixLayout::kDeliveriesAsRows ? "delivery_id" : "hub_id";
  if (header.empty() || header.front() != expected_first) {
    throw InputError("matrix header must start with '" + expected_first + "'");
  }
  std::vector<std::string> file_cols(header.begin() + 1, header.end());
  if (file_cols.empty()) throw InputError("matrix has no value columns");

  std::vector<std::string> file_rows;
  std::vector<double> cells;  // file row-major
  while (auto row = reader.next()) {
    const std::string where = "matrix row " + std::to_string(reader.line());
    if (row->size() != header.size()) {
      throw InputError(where + ": expected " + std::to_string(header.size()) + " fields, got " +
                       std::to_string(row->size()));
    }
    file_rows.push_back((*row)[0]);
    for (std::size_t c = 1; c < row->size(); ++c) {
      const std::string& cell = (*row)[c];
      if (cell.empty()) {
        cells.push_back(kUnreachable);
        continue;
      }
      const double v = csv::parse_double(cell, "distance", reader.line());
      if (std::isnan(v) || v < 0.0) throw InputError(where + ": negative or NaN distance '" + cell + "'");
      cells.push_back(v);
    }
  }
  if (file_rows.empty()) throw InputError("matrix has no data rows");

  const std::size_t fr = file_rows.size();
  const std::size_t fc = file_cols.size();
  if (layout == MatrixLayout::kDeliveriesAsRows) {
    DistanceMatrix m(std::move(file_rows), std::move(file_cols));
    for (std::size_t i = 0; i < fr; ++i) {
      for (std::size_t j = 0; j < fc; ++j) m.at(i, j) = cells[i * fc + j];
    }
    return m;
  }
  DistanceMatrix m(std::move(file_cols), std::move(file_rows));
  for (std::size_t r = 0; r < fr; ++r) {
    for (std::size_t c = 0; c < fc; ++c) m.at(c, r) = cells[r * fc + c];
  }
  return m;
}

DistanceMatrix load_matrix(const std::filesystem::path& path, MatrixLayout layout) {
  auto in = csv::open_input(path);
  return load_matrix(in, layout);
}

}  // namespace hubloc
