#include "hubloc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "hubloc/error.hpp"

namespace hubloc {

namespace {

void sort_unique_checked(std::vector<std::size_t>& cols, std::size_t limit, const char* what) {
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
    throw InputError(std::string(what) + " columns contain duplicates");
  }
  if (!cols.empty() && cols.back() >= limit) {
    throw InputError(std::string(what) + " column " + std::to_string(cols.back()) + " out of range");
  }
}

struct Best {
  double cost;
  std::size_t column;
  bool operator<(const Best& o) const { return cost < o.cost || (cost == o.cost && column < o.column); }
};

Best scan(const HubScenario& s, std::span<const double> baseline, std::span<const std::size_t> cols) {
  Best best{kUnreachable, cols.front()};
  bool any = false;
  for (std::size_t c : cols) {
    const double cost = evaluate_cost(baseline, s.matrix().column(c));
    if (!any || cost < best.cost) {
      best = {cost, c};
      any = true;
    }
  }
  return best;
}

}  // namespace

HubScenario::HubScenario(const DistanceMatrix& matrix, std::vector<std::size_t> existing,
                         std::vector<std::size_t> candidates)
    : matrix_(&matrix), existing_(std::move(existing)), candidates_(std::move(candidates)) {
  sort_unique_checked(existing_, matrix.cols(), "existing");
  sort_unique_checked(candidates_, matrix.cols(), "candidate");
  std::vector<std::size_t> both;
  std::set_intersection(existing_.begin(), existing_.end(), candidates_.begin(), candidates_.end(),
                        std::back_inserter(both));
  if (!both.empty()) {
    throw InputError("column " + std::to_string(both.front()) + " is both existing and candidate");
  }
}

HubScenario HubScenario::with_remaining_candidates(const DistanceMatrix& matrix,
                                                   std::vector<std::size_t> existing) {
  std::vector<std::size_t> candidates;
  for (std::size_t c = 0; c < matrix.cols(); ++c) {
    if (std::find(existing.begin(), existing.end(), c) == existing.end()) candidates.push_back(c);
  }
  return HubScenario(matrix, std::move(existing), std::move(candidates));
}

bool HubScenario::is_existing(std::size_t column) const {
  return std::binary_search(existing_.begin(), existing_.end(), column);
}

std::vector<double> best_existing_distances(const HubScenario& scenario) {
  const DistanceMatrix& m = scenario.matrix();
  std::vector<double> best(m.rows(), kUnreachable);
  for (std::size_t c : scenario.existing()) {
    const auto col = m.column(c);
    for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::min(best[i], col[i]);
  }
  return best;
}

double evaluate_cost(std::span<const double> baseline, std::span<const double> column) {
  double total = 0.0;
  for (std::size_t i = 0; i < baseline.size(); ++i) total += std::min(baseline[i], column[i]);
  return total;
}

double evaluate_cost(const HubScenario& scenario, std::size_t candidate) {
  if (scenario.is_existing(candidate)) {
    throw InputError("column " + std::to_string(candidate) + " is an existing hub");
  }
  if (candidate >= scenario.matrix().cols()) throw InputError("candidate column out of range");
  return evaluate_cost(best_existing_distances(scenario), scenario.matrix().column(candidate));
}

std::vector<Assignment> assign_nearest(const DistanceMatrix& matrix, std::span<const std::size_t> hubs) {
  if (hubs.empty()) throw InputError("assignment needs at least one hub");
  std::vector<std::size_t> sorted(hubs.begin(), hubs.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= matrix.cols()) throw InputError("hub column out of range");

  std::vector<Assignment> out(matrix.rows(), Assignment{sorted.front(), kUnreachable});
  for (std::size_t c : sorted) {
    const auto col = matrix.column(c);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (col[i] < out[i].distance_m) out[i] = {c, col[i]};
    }
  }
  std::vector<std::string> unreachable;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out[i].distance_m)) unreachable.push_back(matrix.row_labels()[i]);
  }
  if (!unreachable.empty()) {
    throw InfeasibleError(std::to_string(unreachable.size()) + " deliveries unreachable from every hub",
                          std::move(unreachable));
  }
  return out;
}

SolveResult solve_conditional_1median(const HubScenario& scenario, const SolveOptions& options) {
  if (scenario.existing().empty()) throw InputError("at least one existing hub is required");
  const auto& candidates = scenario.candidates();
  if (candidates.empty()) throw InputError("no candidate hubs to evaluate");
  const DistanceMatrix& m = scenario.matrix();

  const std::vector<double> baseline = best_existing_distances(scenario);

  const auto start = std::chrono::steady_clock::now();
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, candidates.size()));
  Best best{};
  if (threads <= 1) {
    best = scan(scenario, baseline, candidates);
  } else {
    // Contiguous ascending chunks; partial winners combine by (cost, column).
    std::vector<Best> partial(threads);
    {
      std::vector<std::jthread> workers;
      const std::size_t chunk = (candidates.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(candidates.size(), lo + chunk);
        if (lo >= hi) {
          partial[t] = {kUnreachable, candidates.back() + 1};
          continue;
        }
        workers.emplace_back([&, t, lo, hi] {
          partial[t] = scan(scenario, baseline, std::span(candidates).subspan(lo, hi - lo));
        });
      }
    }
    best = *std::min_element(partial.begin(), partial.end());
  }
  const double scan_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!std::isfinite(best.cost)) {
    // Deliveries no hub or candidate can reach; if every delivery is coverable
    // by some candidate, no single candidate covers them all, so report every
    // delivery left uncovered by the existing hubs.
    std::vector<std::string> hopeless, uncovered;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (std::isfinite(baseline[i])) continue;
      uncovered.push_back(m.row_labels()[i]);
      const bool reachable = std::any_of(candidates.begin(), candidates.end(),
                                         [&](std::size_t c) { return std::isfinite(m.at(i, c)); });
      if (!reachable) hopeless.push_back(m.row_labels()[i]);
    }
    auto ids = hopeless.empty() ? std::move(uncovered) : std::move(hopeless);
    throw InfeasibleError("every candidate leaves " + std::to_string(ids.size()) +
                              " or more deliveries unreachable",
                          std::move(ids));
  }

  SolveResult result;
  result.best_hub_column = best.column;
  result.min_cost = best.cost;
  result.scan_seconds = scan_seconds;
  result.baseline_cost = 0.0;
  for (double b : baseline) result.baseline_cost += b;

  result.hub_columns = scenario.existing();
  result.hub_columns.push_back(best.column);
  std::sort(result.hub_columns.begin(), result.hub_columns.end());
  result.assignments = assign_nearest(m, result.hub_columns);
  result.cluster_sizes.assign(result.hub_columns.size(), 0);
  for (const Assignment& a : result.assignments) {
    const auto it = std::lower_bound(result.hub_columns.begin(), result.hub_columns.end(), a.hub_column);
    ++result.cluster_sizes[static_cast<std::size_t>(it - result.hub_columns.begin())];
  }
  return result;
}

SolveResult relocate(const HubScenario& scenario, std::vector<std::size_t> keep,
                     std::vector<std::size_t> pool, const SolveOptions& options) {
  std::sort(keep.begin(), keep.end());
  if (keep.empty()) throw InputError("relocation must keep at least one existing hub");
  if (!std::includes(scenario.existing().begin(), scenario.existing().end(), keep.begin(), keep.end())) {
    throw InputError("kept hubs must be existing hubs");
  }
  if (keep.size() >= scenario.existing().size()) {
    throw InputError("relocation must remove at least one existing hub");
  }
  const HubScenario reduced(scenario.matrix(), std::move(keep), std::move(pool));
  return solve_conditional_1median(reduced, options);
}

}  // namespace hubloc
