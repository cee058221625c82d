#include "hubloc/contraction.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <utility>

namespace hubloc {

namespace {

using QueueEntry = std::pair<double, std::uint32_t>;
using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

struct DynArc {
  std::uint32_t node;
  double length_m;
  std::uint32_t middle;
};

// Mutable overlay used while contracting. Contracted nodes are removed from
// their neighbors' lists so searches only see the remaining graph.
class DynamicGraph {
 public:
  explicit DynamicGraph(const RoadGraph& g) : out_(g.node_count()), in_(g.node_count()) {
    for (const RoadEdge& e : g.edges()) {
      if (e.from != e.to) add_or_improve(e.from, e.to, e.length_m, ChArc::kNoMiddle);
    }
  }

  const std::vector<DynArc>& out(std::uint32_t v) const { return out_[v]; }
  const std::vector<DynArc>& in(std::uint32_t v) const { return in_[v]; }

  // Returns true when an arc was added or shortened.
  bool add_or_improve(std::uint32_t u, std::uint32_t w, double length, std::uint32_t middle) {
    auto& outs = out_[u];
    const auto it = std::find_if(outs.begin(), outs.end(), [&](const DynArc& a) { return a.node == w; });
    if (it == outs.end()) {
      outs.push_back({w, length, middle});
      in_[w].push_back({u, length, middle});
      return true;
    }
    if (length >= it->length_m) return false;
    it->length_m = length;
    it->middle = middle;
    for (DynArc& a : in_[w]) {
      if (a.node == u) {
        a.length_m = length;
        a.middle = middle;
        break;
      }
    }
    return true;
  }

  void remove(std::uint32_t v) {
    for (const DynArc& a : out_[v]) erase_from(in_[a.node], v);
    for (const DynArc& a : in_[v]) erase_from(out_[a.node], v);
    out_[v].clear();
    in_[v].clear();
  }

 private:
  static void erase_from(std::vector<DynArc>& arcs, std::uint32_t v) {
    std::erase_if(arcs, [v](const DynArc& a) { return a.node == v; });
  }

  std::vector<std::vector<DynArc>> out_, in_;
};

class WitnessSearch {
 public:
  explicit WitnessSearch(std::size_t n) : dist_(n, kUnreachable) {}

  // Bounded Dijkstra from `source` in the remaining graph, never entering
  // `excluded`. Tentative distances are real path lengths, so the caller may
  // use them as witnesses even when the search stopped early.
  void run(const DynamicGraph& g, std::uint32_t source, std::uint32_t excluded, double max_dist,
           std::size_t settled_limit) {
    reset();
    MinQueue queue;
    set(source, 0.0);
    queue.emplace(0.0, source);
    std::size_t settled = 0;
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (d > dist_[u]) continue;
      if (d > max_dist || ++settled > settled_limit) break;
      for (const DynArc& a : g.out(u)) {
        if (a.node == excluded) continue;
        const double nd = d + a.length_m;
        if (nd < dist_[a.node]) {
          set(a.node, nd);
          queue.emplace(nd, a.node);
        }
      }
    }
  }

  double dist(std::uint32_t v) const { return dist_[v]; }

 private:
  void set(std::uint32_t v, double d) {
    if (dist_[v] == kUnreachable) touched_.push_back(v);
    dist_[v] = d;
  }
  void reset() {
    for (std::uint32_t v : touched_) dist_[v] = kUnreachable;
    touched_.clear();
  }

  std::vector<double> dist_;
  std::vector<std::uint32_t> touched_;
};

struct PendingShortcut {
  std::uint32_t from, to;
  double length_m;
};

// Shortcuts needed if `v` were contracted now.
std::vector<PendingShortcut> plan_contraction(const DynamicGraph& g, WitnessSearch& witness,
                                              std::uint32_t v, std::size_t settled_limit) {
  std::vector<PendingShortcut> needed;
  for (const DynArc& in : g.in(v)) {
    const std::uint32_t u = in.node;
    double max_via = 0.0;
    bool any = false;
    for (const DynArc& out : g.out(v)) {
      if (out.node == u) continue;
      max_via = std::max(max_via, in.length_m + out.length_m);
      any = true;
    }
    if (!any) continue;
    witness.run(g, u, v, max_via, settled_limit);
    for (const DynArc& out : g.out(v)) {
      if (out.node == u) continue;
      const double via = in.length_m + out.length_m;
      if (witness.dist(out.node) > via) needed.push_back({u, out.node, via});
    }
  }
  return needed;
}

std::int64_t priority(const DynamicGraph& g, WitnessSearch& witness, std::uint32_t v,
                      std::size_t settled_limit, const std::vector<std::int64_t>& contracted_nbrs) {
  const auto shortcuts = static_cast<std::int64_t>(plan_contraction(g, witness, v, settled_limit).size());
  const auto removed = static_cast<std::int64_t>(g.in(v).size() + g.out(v).size());
  return shortcuts - removed + contracted_nbrs[v];
}

// Thread-local scratch space for point-to-point queries.
struct QueryWorkspace {
  std::vector<double> fwd, bwd;
  std::vector<std::uint32_t> touched;

  void prepare(std::size_t n) {
    if (fwd.size() != n) {
      fwd.assign(n, kUnreachable);
      bwd.assign(n, kUnreachable);
      touched.clear();
    } else {
      for (std::uint32_t v : touched) fwd[v] = bwd[v] = kUnreachable;
      touched.clear();
    }
  }
};

}  // namespace

ContractionHierarchy ContractionHierarchy::build(const RoadGraph& graph, const ChOptions& options) {
  const std::size_t n = graph.node_count();
  ContractionHierarchy ch;
  ch.fingerprint_ = graph.fingerprint();
  ch.rank_.assign(n, 0);
  ch.by_rank_.reserve(n);

  DynamicGraph g(graph);
  WitnessSearch witness(n);
  std::vector<char> contracted(n, 0);
  std::vector<std::int64_t> contracted_nbrs(n, 0);
  std::vector<std::vector<ChArc>> up_out(n), up_in(n);

  auto contract = [&](std::uint32_t v) {
    const auto pending = plan_contraction(g, witness, v, options.witness_settled_limit);
    for (const DynArc& a : g.out(v)) {
      up_out[v].push_back({a.node, a.length_m, a.middle});
      ++contracted_nbrs[a.node];
    }
    for (const DynArc& a : g.in(v)) {
      up_in[v].push_back({a.node, a.length_m, a.middle});
      ++contracted_nbrs[a.node];
    }
    g.remove(v);
    for (const PendingShortcut& s : pending) g.add_or_improve(s.from, s.to, s.length_m, v);
    contracted[v] = 1;
    ch.rank_[v] = static_cast<std::uint32_t>(ch.by_rank_.size());
    ch.by_rank_.push_back(v);
  };

  if (!options.order.empty()) {
    if (options.order.size() != n) throw std::invalid_argument("contraction order must list every node");
    for (NodeRef v : options.order) {
      if (v.index >= n || contracted[v.index]) {
        throw std::invalid_argument("contraction order is not a permutation");
      }
      contract(v.index);
    }
  } else {
    using Entry = std::pair<std::int64_t, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (std::uint32_t v = 0; v < n; ++v) {
      queue.emplace(priority(g, witness, v, options.witness_settled_limit, contracted_nbrs), v);
    }
    while (!queue.empty()) {
      const std::uint32_t v = queue.top().second;
      queue.pop();
      const Entry fresh{priority(g, witness, v, options.witness_settled_limit, contracted_nbrs), v};
      if (!queue.empty() && queue.top() < fresh) {
        queue.push(fresh);
        continue;
      }
      contract(v);
    }
  }

  // Final shortcut list: every hierarchy arc that still carries a middle node.
  for (std::uint32_t v = 0; v < n; ++v) {
    for (const ChArc& a : up_out[v]) {
      if (a.is_shortcut()) ch.shortcuts_.push_back({NodeRef{v}, NodeRef{a.head}, NodeRef{a.middle}, a.length_m});
    }
    for (const ChArc& a : up_in[v]) {
      if (a.is_shortcut()) ch.shortcuts_.push_back({NodeRef{a.head}, NodeRef{v}, NodeRef{a.middle}, a.length_m});
    }
  }

  auto flatten = [n](std::vector<std::vector<ChArc>>& lists, std::vector<std::uint32_t>& offsets,
                     std::vector<ChArc>& arcs) {
    offsets.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(lists[v].begin(), lists[v].end(),
                [](const ChArc& a, const ChArc& b) { return a.head < b.head; });
      offsets[v + 1] = offsets[v] + static_cast<std::uint32_t>(lists[v].size());
    }
    arcs.reserve(offsets[n]);
    for (auto& list : lists) arcs.insert(arcs.end(), list.begin(), list.end());
  };
  flatten(up_out, ch.out_offsets_, ch.out_arcs_);
  flatten(up_in, ch.in_offsets_, ch.in_arcs_);
  return ch;
}

std::span<const ChArc> ContractionHierarchy::upward_out(NodeRef v) const noexcept {
  return {out_arcs_.data() + out_offsets_[v.index], out_arcs_.data() + out_offsets_[v.index + 1]};
}

std::span<const ChArc> ContractionHierarchy::upward_in(NodeRef v) const noexcept {
  return {in_arcs_.data() + in_offsets_[v.index], in_arcs_.data() + in_offsets_[v.index + 1]};
}

void ContractionHierarchy::check_fresh(const RoadGraph& graph) const {
  if (graph.fingerprint() != fingerprint_ || graph.node_count() != rank_.size()) {
    throw StaleIndexError("contraction hierarchy was built for a different graph");
  }
}

double ContractionHierarchy::query(const RoadGraph& graph, NodeRef source, NodeRef target) const {
  check_fresh(graph);
  return query(source, target);
}

double ContractionHierarchy::query(NodeRef source, NodeRef target) const {
  if (source == target) return 0.0;
  thread_local QueryWorkspace ws;
  ws.prepare(rank_.size());
  auto& fwd = ws.fwd;
  auto& bwd = ws.bwd;
  auto touch = [&](std::uint32_t v) {
    if (fwd[v] == kUnreachable && bwd[v] == kUnreachable) ws.touched.push_back(v);
  };

  MinQueue qf, qb;
  touch(source.index);
  fwd[source.index] = 0.0;
  qf.emplace(0.0, source.index);
  touch(target.index);
  bwd[target.index] = 0.0;
  qb.emplace(0.0, target.index);
  double best = kUnreachable;

  auto step = [&](MinQueue& queue, std::vector<double>& mine, const std::vector<double>& other,
                  bool forward) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > mine[u]) return;
    if (other[u] != kUnreachable) best = std::min(best, d + other[u]);
    const auto arcs = forward ? upward_out(NodeRef{u}) : upward_in(NodeRef{u});
    for (const ChArc& a : arcs) {
      const double nd = d + a.length_m;
      if (nd < mine[a.head]) {
        touch(a.head);
        mine[a.head] = nd;
        queue.emplace(nd, a.head);
        if (other[a.head] != kUnreachable) best = std::min(best, nd + other[a.head]);
      }
    }
  };

  while (true) {
    const double kf = qf.empty() ? kUnreachable : qf.top().first;
    const double kb = qb.empty() ? kUnreachable : qb.top().first;
    if (std::min(kf, kb) >= best || (qf.empty() && qb.empty())) break;
    if (kf <= kb) {
      step(qf, fwd, bwd, true);
    } else {
      step(qb, bwd, fwd, false);
    }
  }
  return best;
}

std::vector<double> ContractionHierarchy::one_to_all(NodeRef source,
                                                     SearchDirection direction) const {
  const bool forward = direction == SearchDirection::kForward;
  std::vector<double> dist(rank_.size(), kUnreachable);
  MinQueue queue;
  dist[source.index] = 0.0;
  queue.emplace(0.0, source.index);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const ChArc& a : forward ? upward_out(NodeRef{u}) : upward_in(NodeRef{u})) {
      const double nd = d + a.length_m;
      if (nd < dist[a.head]) {
        dist[a.head] = nd;
        queue.emplace(nd, a.head);
      }
    }
  }
  // Downward sweep: every node pulls from its higher-ranked neighbors, which
  // are final by the time it is visited.
  for (auto it = by_rank_.rbegin(); it != by_rank_.rend(); ++it) {
    const std::uint32_t v = *it;
    double best = dist[v];
    for (const ChArc& a : forward ? upward_in(NodeRef{v}) : upward_out(NodeRef{v})) {
      best = std::min(best, dist[a.head] + a.length_m);
    }
    dist[v] = best;
  }
  return dist;
}

const ChArc* ContractionHierarchy::find_arc(NodeRef from, NodeRef to) const {
  if (from == to || from.index >= rank_.size() || to.index >= rank_.size()) return nullptr;
  const bool upward = rank_[to.index] > rank_[from.index];
  const auto arcs = upward ? upward_out(from) : upward_in(to);
  const std::uint32_t key = upward ? to.index : from.index;
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), key,
                                   [](const ChArc& a, std::uint32_t k) { return a.head < k; });
  return it != arcs.end() && it->head == key ? &*it : nullptr;
}

std::vector<NodeRef> ContractionHierarchy::unpack(NodeRef from, NodeRef to) const {
  const ChArc* arc = find_arc(from, to);
  if (arc == nullptr) {
    throw std::out_of_range("no hierarchy arc " + std::to_string(from.index) + "->" +
                            std::to_string(to.index));
  }
  if (!arc->is_shortcut()) return {from, to};
  std::vector<NodeRef> path = unpack(from, NodeRef{arc->middle});
  const std::vector<NodeRef> tail = unpack(NodeRef{arc->middle}, to);
  path.insert(path.end(), tail.begin() + 1, tail.end());
  return path;
}

double ch_query(const ContractionHierarchy& index, const RoadGraph& graph, NodeRef source,
                NodeRef target) {
  return index.query(graph, source, target);
}

}  // namespace hubloc
