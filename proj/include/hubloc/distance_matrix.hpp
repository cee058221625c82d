#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hubloc/contraction.hpp"
#include "hubloc/dijkstra.hpp"
#include "hubloc/road_graph.hpp"

namespace hubloc {

/// Deliveries x hubs road distances in meters. Row i is a delivery, column j
/// a hub. Unreachable pairs hold kUnreachable. Storage is column-major so a
/// hub's distances to all deliveries are contiguous.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<std::string> row_labels, std::vector<std::string> column_labels);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return column_labels_.size(); }

  double at(std::size_t row, std::size_t col) const { return values_[col * rows() + row]; }
  double& at(std::size_t row, std::size_t col) { return values_[col * rows() + row]; }

  std::span<const double> column(std::size_t col) const {
    return {values_.data() + col * rows(), rows()};
  }
  std::span<double> column(std::size_t col) { return {values_.data() + col * rows(), rows()}; }

  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& column_labels() const noexcept { return column_labels_; }

  /// Column index for a hub label, or -1.
  std::ptrdiff_t find_column(const std::string& label) const;

  /// Appends a column; `values` must have rows() entries.
  void append_column(std::string label, std::span<const double> values);

  /// Scales every finite entry by `factor`.
  DistanceMatrix scaled(double factor) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> column_labels_;
  std::vector<double> values_;
};

enum class RoutingEngine { kDijkstra, kContractionHierarchy };

/// kHubToDelivery: entry (i, j) = d(hub j -> delivery i).
/// kDeliveryToHub: entry (i, j) = d(delivery i -> hub j).
enum class MatrixDirection { kHubToDelivery, kDeliveryToHub };

struct MatrixOptions {
  RoutingEngine engine = RoutingEngine::kDijkstra;
  MatrixDirection direction = MatrixDirection::kHubToDelivery;
  /// Worker threads for column computation; 0 means hardware concurrency.
  unsigned threads = 1;
  /// Reused when engine is kContractionHierarchy; built on demand otherwise.
  const ContractionHierarchy* hierarchy = nullptr;
  ChOptions ch_options;
};

/// One search per hub column. Output does not depend on the thread count.
/// Labels default to the graph node ids when empty.
DistanceMatrix build_distance_matrix(const RoadGraph& graph, std::span<const NodeRef> deliveries,
                                     std::span<const NodeRef> hubs,
                                     const MatrixOptions& options = {},
                                     std::vector<std::string> delivery_labels = {},
                                     std::vector<std::string> hub_labels = {});

/// Orientation of a matrix file on disk. kDeliveriesAsRows is the native
/// layout; kHubsAsRows accepts files written the other way round.
enum class MatrixLayout { kDeliveriesAsRows, kHubsAsRows };

/// CSV: header `delivery_id,<hub_1>,...,<hub_n>`, one row per delivery,
/// empty cell = unreachable.
void save_matrix(const DistanceMatrix& m, std::ostream& out);
void save_matrix(const DistanceMatrix& m, const std::filesystem::path& path);

/// Rejects ragged rows, negative or NaN cells, with the 1-based file row.
DistanceMatrix load_matrix(std::istream& in, MatrixLayout layout = MatrixLayout::kDeliveriesAsRows);
DistanceMatrix load_matrix(const std::filesystem::path& path,
                           MatrixLayout layout = MatrixLayout::kDeliveriesAsRows);

}  // namespace hubloc
