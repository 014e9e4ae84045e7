#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/graph.hpp"
#include "mvis/metric.hpp"
#include "mvis/vertex_set.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

struct SolveOptions {
  std::uint64_t node_budget = 0;               // 0 = unlimited
  std::chrono::milliseconds time_budget{0};    // 0 = unlimited
  unsigned threads = 1;
  std::optional<std::size_t> upper_bound;      // stop as soon as a set this large is found
  std::size_t oracle_limit = 18;               // brute force refuses larger graphs
};

struct SolveResult {
  std::size_t value = 0;
  Certificate certificate;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
  bool exact = true;  // false when a budget stopped the search early
};

/// Equal-size tie-break shared by every solver: the lexicographically smallest
/// sorted member list wins.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
    if (*ia != *ib) return *ia < *ib;
  return ia == a.end() && ib != b.end();
}

namespace detail {

/**
 * Incremental admissibility tests for growing a set of the given kind one
 * vertex at a time. All three kinds are closed under taking subsets, so a
 * vertex that cannot be added to X cannot be added to any superset of X
 * either, which is what makes include-pruning sound.
 */
class Extender {
 public:
  Extender(const Graph& g, const DistanceMatrix& dist, SetKind kind)
      : g_(g), dist_(dist), kind_(kind), n_(g.order()) {
    if (kind_ != SetKind::mutual && n_ <= kPrecomputeLimit) {
      through_.resize(n_);
      for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = a + 1; b < n_; ++b)
          for (Vertex v = 0; v < n_; ++v)
            if (v != a && v != b && interior(a, b, v)) through_[v].emplace_back(a, b);
    }
  }

  /// Vertices that may appear in some nonempty set of this kind.
  std::vector<Vertex> candidates() const {
    std::vector<Vertex> out;
    VertexSet empty(n_);
    for (Vertex v = 0; v < n_; ++v)
      if (kind_ == SetKind::mutual || can_add(empty, v)) out.push_back(v);
    return out;
  }

  /// Whether X ∪ {v} is still a set of the kind, given that X is.
  bool can_add(const VertexSet& x, Vertex v) const {
    VertexSet grown = x;
    grown.insert(v);
    if (kind_ == SetKind::mutual) {
      for (Vertex a : x)
        if (!pair_visible(g_, dist_, x, a, v)) return false;
      for (Vertex a : x) {
        for (Vertex b = x.next_from(a + 1); b < n_; b = x.next_from(b + 1))
          if (interior(a, b, v) && !pair_visible(g_, dist_, grown, a, b)) return false;
      }
      return true;
    }
    if (!through_.empty()) {
      for (const auto& [a, b] : through_[v])
        if (!pair_visible(g_, dist_, grown, a, b)) return false;
    } else {
      for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = a + 1; b < n_; ++b)
          if (a != v && b != v && interior(a, b, v) && !pair_visible(g_, dist_, grown, a, b)) return false;
    }
    if (kind_ == SetKind::feasible_total) {
      const VertexSet& nv = g_.neighbors(v);
      for (Vertex a : x & nv)
        if (((g_.neighbors(a) & nv) - grown).empty()) return false;
      // adjacent members whose outside common neighbour may have been v
      const VertexSet near = x & nv;
      for (Vertex a : near) {
        for (Vertex b : g_.neighbors(a) & near) {
          if (b <= a) continue;
          if (((g_.neighbors(a) & g_.neighbors(b)) - grown).empty()) return false;
        }
      }
    }
    return true;
  }

 private:
  static constexpr std::size_t kPrecomputeLimit = 128;

  bool interior(Vertex a, Vertex b, Vertex v) const {
    return dist_.at(a, v) + dist_.at(v, b) == dist_.at(a, b);
  }

  const Graph& g_;
  const DistanceMatrix& dist_;
  SetKind kind_;
  std::size_t n_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> through_;
};

struct SharedState {
  std::atomic<std::size_t> global_best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::atomic<bool> reached_bound{false};
};

class Search {
 public:
  Search(const Extender& ext, const std::vector<Vertex>& cand, const SolveOptions& opts,
         std::chrono::steady_clock::time_point start, SharedState& shared, std::size_t n)
      : ext_(ext), cand_(cand), opts_(opts), start_(start), shared_(shared), best_set_(n) {
    suffix_.assign(cand_.size() + 1, 0);
    for (std::size_t i = cand_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + 1;
  }

  void run(std::size_t pos, VertexSet& x, std::size_t size) { dfs(pos, x, size); }

  std::size_t best() const { return best_; }
  const VertexSet& best_set() const { return best_set_; }
  bool found() const { return found_; }
  std::uint64_t local_nodes() const { return local_nodes_; }

 private:
  bool budget_hit() {
    if (shared_.aborted.load(std::memory_order_relaxed)) return true;
    if ((++local_nodes_ & 1023u) == 0) {
      const auto total = shared_.nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
      if (opts_.node_budget != 0 && total > opts_.node_budget) shared_.aborted = true;
      if (opts_.time_budget.count() != 0 && std::chrono::steady_clock::now() - start_ > opts_.time_budget)
        shared_.aborted = true;
    }
    return shared_.aborted.load(std::memory_order_relaxed);
  }

  bool pruned(std::size_t bound) const {
    if (found_ && bound <= best_) return true;
    return bound < shared_.global_best.load(std::memory_order_relaxed);
  }

  void dfs(std::size_t pos, VertexSet& x, std::size_t size) {
    if (budget_hit() || shared_.reached_bound.load(std::memory_order_relaxed)) return;
    if (!found_ || size > best_) {
      found_ = true;
      best_ = size;
      best_set_ = x;
      std::size_t g = shared_.global_best.load();
      while (g < size && !shared_.global_best.compare_exchange_weak(g, size)) {
      }
      if (opts_.upper_bound && size >= *opts_.upper_bound) shared_.reached_bound = true;
    }
    if (pos == cand_.size()) return;
    if (pruned(size + suffix_[pos])) return;
    const Vertex v = cand_[pos];
    if (ext_.can_add(x, v)) {
      x.insert(v);
      dfs(pos + 1, x, size + 1);
      x.erase(v);
    }
    if (!pruned(size + suffix_[pos + 1])) dfs(pos + 1, x, size);
  }

  const Extender& ext_;
  const std::vector<Vertex>& cand_;
  const SolveOptions& opts_;
  std::chrono::steady_clock::time_point start_;
  SharedState& shared_;
  std::vector<std::size_t> suffix_;
  std::size_t best_ = 0;
  bool found_ = false;
  VertexSet best_set_;
  std::uint64_t local_nodes_ = 0;
};

struct WorkItem {
  std::size_t pos;
  VertexSet prefix;
  std::size_t size;
};

/// Enumerates the feasible include/exclude decisions on the first `depth`
/// candidates, in include-first order.
inline void split_work(const Extender& ext, const std::vector<Vertex>& cand, std::size_t depth,
                       std::size_t pos, VertexSet& x, std::size_t size, std::vector<WorkItem>& out) {
  if (pos == depth) {
    out.push_back({pos, x, size});
    return;
  }
  const Vertex v = cand[pos];
  if (ext.can_add(x, v)) {
    x.insert(v);
    split_work(ext, cand, depth, pos + 1, x, size + 1, out);
    x.erase(v);
  }
  split_work(ext, cand, depth, pos + 1, x, size, out);
}

}  // namespace detail

/**
 * Exact maximum set of the given kind by depth-first branch and bound.
 *
 * Vertices are decided in ascending id order, include before exclude; a
 * branch is cut when |current| plus the number of undecided candidates cannot
 * beat the incumbent. The reported certificate is the lexicographically
 * smallest optimum, which is also the first one met in this order, so the
 * result does not depend on the thread count.
 */
inline SolveResult solve_exact(const Graph& g, const DistanceMatrix& dist, SetKind kind,
                               const SolveOptions& opts = {}) {
  require_connected(g, "exact solver");
  if (dist.order() != g.order()) throw InvalidArgument("distance matrix does not match graph");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.order();

  detail::Extender ext(g, dist, kind);
  const std::vector<Vertex> cand = ext.candidates();
  detail::SharedState shared;

  SolveResult result;
  VertexSet best_set(n);
  std::size_t best = 0;
  std::uint64_t nodes = 0;

  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || cand.size() < 12) {
    detail::Search search(ext, cand, opts, start, shared, n);
    VertexSet x(n);
    search.run(0, x, 0);
    best = search.best();
    best_set = search.best_set();
    nodes = search.local_nodes();
  } else {
    std::size_t depth = 0;
    while ((std::size_t{1} << depth) < 8u * threads && depth + 8 < cand.size()) ++depth;
    std::vector<detail::WorkItem> items;
    VertexSet x(n);
    detail::split_work(ext, cand, depth, 0, x, 0, items);

    struct ItemResult {
      bool done = false;
      std::size_t best = 0;
      VertexSet set;
    };
    std::vector<ItemResult> results(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total_nodes{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        detail::Search search(ext, cand, opts, start, shared, n);
        VertexSet local = items[i].prefix;
        search.run(items[i].pos, local, items[i].size);
        total_nodes += search.local_nodes();
        if (search.found()) results[i] = {true, search.best(), search.best_set()};
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    bool have = false;
    for (const auto& r : results) {
      if (!r.done) continue;
      if (!have || r.best > best || (r.best == best && lex_less(r.set, best_set))) {
        have = true;
        best = r.best;
        best_set = r.set;
      }
    }
    nodes = total_nodes.load();
  }

  result.value = best;
  result.certificate = Certificate(best_set, kind);
  if (!verify(g, dist, result.certificate)) {
    throw Error("internal error: exact solver produced a set that fails its checker");
  }
  result.nodes_explored = nodes;
  result.exact = !shared.aborted.load();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

inline SolveResult solve_exact(const Graph& g, SetKind kind, const SolveOptions& opts = {}) {
  const DistanceMatrix dist(g);
  return solve_exact(g, dist, kind, opts);
}

/// Ground-truth oracle: checks every subset with the plain (non-incremental)
/// checkers. Ties go to the lexicographically smallest member list.
inline SolveResult brute_force(const Graph& g, const DistanceMatrix& dist, SetKind kind,
                               std::size_t oracle_limit = 18) {
  require_connected(g, "brute force oracle");
  const std::size_t n = g.order();
  if (n > oracle_limit || n >= 63) {
    throw CapacityExceeded("brute force oracle limited to " + std::to_string(oracle_limit) + " vertices");
  }
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  VertexSet best_set(n);
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++result.nodes_explored;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best) continue;
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1u) s.insert(v);
    if (size == best && !lex_less(s, best_set)) continue;
    if (satisfies(g, dist, s, kind)) {
      best = size;
      best_set = s;
    }
  }
  result.value = best;
  result.certificate = Certificate(best_set, kind);
  verify(g, dist, result.certificate);
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

inline SolveResult brute_force(const Graph& g, SetKind kind, std::size_t oracle_limit = 18) {
  const DistanceMatrix dist(g);
  return brute_force(g, dist, kind, oracle_limit);
}

}  // namespace mvis
