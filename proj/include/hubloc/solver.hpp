#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hubloc/distance_matrix.hpp"

namespace hubloc {

/// A distance matrix together with the columns of the existing hubs and the
/// columns eligible for the new hub. Both index sets are kept sorted.
class HubScenario {
 public:
  /// Throws InputError if an index is out of range, repeated, or in both sets.
  HubScenario(const DistanceMatrix& matrix, std::vector<std::size_t> existing,
              std::vector<std::size_t> candidates);

  /// Every column that is not an existing hub becomes a candidate.
  static HubScenario with_remaining_candidates(const DistanceMatrix& matrix,
                                               std::vector<std::size_t> existing);

  const DistanceMatrix& matrix() const noexcept { return *matrix_; }
  const std::vector<std::size_t>& existing() const noexcept { return existing_; }
  const std::vector<std::size_t>& candidates() const noexcept { return candidates_; }
  bool is_existing(std::size_t column) const;

 private:
  const DistanceMatrix* matrix_;
  std::vector<std::size_t> existing_;
  std::vector<std::size_t> candidates_;
};

struct Assignment {
  std::size_t hub_column = 0;
  double distance_m = 0.0;
};

struct SolveResult {
  std::size_t best_hub_column = 0;
  /// Total distance with the existing hubs plus the chosen one.
  double min_cost = 0.0;
  /// Total distance with the existing hubs only.
  double baseline_cost = 0.0;
  /// Nearest hub per delivery over existing + best.
  std::vector<Assignment> assignments;
  /// Existing columns followed by the best column, sorted ascending.
  std::vector<std::size_t> hub_columns;
  /// Deliveries served by each entry of hub_columns.
  std::vector<std::size_t> cluster_sizes;
  /// Wall-clock time of the candidate scan alone.
  double scan_seconds = 0.0;
};

struct SolveOptions {
  /// Candidate evaluation workers; 0 means hardware concurrency.
  unsigned threads = 1;
};

/// Row-wise minimum over the existing hub columns (kUnreachable when the
/// row is unreachable from all of them).
std::vector<double> best_existing_distances(const HubScenario& scenario);

/// Sum over rows of min(baseline[i], column[i]), accumulated in row order.
double evaluate_cost(std::span<const double> baseline, std::span<const double> column);

/// Total cost of adding `candidate`. Throws InputError if it is an existing hub.
double evaluate_cost(const HubScenario& scenario, std::size_t candidate);

/// Exhaustive scan over the candidates in ascending column order; the first
/// strictly smaller cost wins, so ties go to the lowest column index.
/// Throws InputError with no candidates, InfeasibleError when every choice
/// leaves some delivery unreachable.
SolveResult solve_conditional_1median(const HubScenario& scenario, const SolveOptions& options = {});

/// Nearest hub per row; ties to the lowest column. Throws InfeasibleError
/// naming the rows no hub reaches.
std::vector<Assignment> assign_nearest(const DistanceMatrix& matrix, std::span<const std::size_t> hubs);

/// Re-solves with `keep` as the existing hubs and `pool` as candidates. The
/// removed hub's own column may be in the pool, so "stay put" is a valid answer.
SolveResult relocate(const HubScenario& scenario, std::vector<std::size_t> keep,
                     std::vector<std::size_t> pool, const SolveOptions& options = {});

}  // namespace hubloc
