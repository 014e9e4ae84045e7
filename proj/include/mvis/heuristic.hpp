#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mvis/graph.hpp"
#include "mvis/metric.hpp"
#include "mvis/random.hpp"
#include "mvis/solver.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

struct HeuristicOptions {
  std::uint64_t seed = 0;
  std::uint64_t max_iterations = 200000;
  std::chrono::milliseconds time_budget{0};  // 0 = unlimited
  std::optional<std::size_t> target;         // stop once a set this large is found
  std::uint64_t restart_after = 2000;        // iterations without improvement before returning to the best set
  double worsening_probability = 0.02;
};

struct HeuristicResult {
  Certificate certificate;
  std::uint64_t iterations = 0;
  std::chrono::duration<double> elapsed{0};
};

/**
 * Lower bound on the mutual-visibility number by iterated local search.
 *
 * Starts from a randomized greedy maximal set. Each iteration drops one
 * random member and refills greedily in random order; the move is kept when
 * the size does not drop (so plateaus are walked freely) and, rarely, when it
 * does. After `restart_after` stale iterations the walk resumes from the best
 * set seen. The result is always re-verified.
 */
inline HeuristicResult heuristic_mv_set(const Graph& g, const DistanceMatrix& dist,
                                        const HeuristicOptions& opts = {}) {
  require_connected(g, "heuristic search");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.order();
  detail::Extender ext(g, dist, SetKind::mutual);
  SplitMix64 rng(opts.seed);

  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  auto shuffle = [&](std::vector<Vertex>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.uniform(i)]);
  };
  auto fill = [&](VertexSet& x, std::size_t& size, Vertex skip) {
    shuffle(order);
    for (Vertex v : order) {
      if (v == skip || x.contains(v)) continue;
      if (ext.can_add(x, v)) {
        x.insert(v);
        ++size;
      }
    }
  };

  VertexSet current(n);
  std::size_t current_size = 0;
  fill(current, current_size, n);
  VertexSet best = current;
  std::size_t best_size = current_size;

  HeuristicResult result;
  std::uint64_t stale = 0;
  for (std::uint64_t it = 0; it < opts.max_iterations && n > 0; ++it) {
    if (opts.target && best_size >= *opts.target) break;
    if (opts.time_budget.count() != 0 && (it & 63u) == 0 &&
        std::chrono::steady_clock::now() - start > opts.time_budget)
      break;
    ++result.iterations;

    if (stale >= opts.restart_after) {
      current = best;
      current_size = best_size;
      stale = 0;
    }
    if (current_size == 0) {
      fill(current, current_size, n);
      continue;
    }

    const auto members = current.to_vector();
    const Vertex drop = members[rng.uniform(members.size())];
    VertexSet trial = current;
    trial.erase(drop);
    std::size_t trial_size = current_size - 1;
    fill(trial, trial_size, drop);

    if (trial_size >= current_size || rng.chance(opts.worsening_probability)) {
      current = trial;
      current_size = trial_size;
    }
    if (current_size > best_size) {
      best = current;
      best_size = current_size;
      stale = 0;
    } else {
      ++stale;
    }
  }

  result.certificate = Certificate(best, SetKind::mutual);
  if (!verify(g, dist, result.certificate)) {
    throw Error("internal error: heuristic produced a set that fails the mutual-visibility check");
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace mvis
