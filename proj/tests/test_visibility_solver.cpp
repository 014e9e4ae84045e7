#include <gtest/gtest.h>

#include <set>

#include "mvis/mvis.hpp"
#include "oracles.hpp"

using namespace mvis;

namespace {

std::set<Vertex> as_set(const VertexSet& s) {
  auto v = s.to_vector();
  return {v.begin(), v.end()};
}

std::vector<Graph> corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  SplitMix64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_connected(rng.between(2, max_n), 0.1 + 0.6 * rng.unit(), rng.next()));
  return out;
}

VertexSet random_subset(const Graph& g, SplitMix64& rng, double p) {
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (rng.chance(p)) s.insert(v);
  return s;
}

}  // namespace

TEST(PairVisible, Examples) {
  const Graph p3 = path_graph(3);
  const DistanceMatrix d3(p3);
  EXPECT_FALSE(is_pair_visible(p3, d3, VertexSet(3, {1}), 0, 2));
  EXPECT_TRUE(is_pair_visible(p3, d3, VertexSet(3, {0, 1, 2}), 0, 1));
  const Graph c4 = cycle_graph(4);
  EXPECT_TRUE(is_pair_visible(c4, DistanceMatrix(c4), VertexSet(4, {1}), 0, 2));
  EXPECT_FALSE(is_pair_visible(c4, DistanceMatrix(c4), VertexSet(4, {1, 3}), 0, 2));
  EXPECT_THROW(is_pair_visible(c4, DistanceMatrix(c4), VertexSet(4), 2, 2), InvalidArgument);
}

TEST(PairVisible, MatchesPathEnumeration) {
  SplitMix64 rng(101);
  for (const auto& g : corpus(1, 40, 9)) {
    const DistanceMatrix d(g);
    for (int t = 0; t < 5; ++t) {
      const VertexSet x = random_subset(g, rng, 0.35);
      const auto xs = as_set(x);
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
          ASSERT_EQ(is_pair_visible(g, d, x, u, v), oracle::visible(g, xs, u, v));
    }
  }
}

TEST(PairVisible, EmptyBlockerAlwaysVisible) {
  for (const auto& g : corpus(2, 20, 10)) {
    const DistanceMatrix d(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) ASSERT_TRUE(is_pair_visible(g, d, g.empty_set(), u, v));
  }
}

TEST(Checkers, MatchOracles) {
  SplitMix64 rng(103);
  for (const auto& g : corpus(3, 40, 8)) {
    const DistanceMatrix d(g);
    for (int t = 0; t < 8; ++t) {
      const VertexSet x = random_subset(g, rng, 0.3);
      const auto xs = as_set(x);
      ASSERT_EQ(is_mv_set(g, d, x), oracle::mv(g, xs));
      ASSERT_EQ(is_tmv_set(g, d, x), oracle::tmv(g, xs));
      ASSERT_EQ(is_feasible_tmv_set(g, d, x), oracle::feasible_tmv(g, xs));
    }
  }
}

TEST(MvSet, Examples) {
  const Graph c7 = cycle_graph(7);
  const DistanceMatrix d(c7);
  EXPECT_TRUE(is_mv_set(c7, d, c7.empty_set()));
  EXPECT_TRUE(is_mv_set(c7, d, VertexSet(7, {0, 2, 4})));
  for (std::size_t mask = 0; mask < 128; ++mask) {
    if (std::popcount(mask) != 4) continue;
    EXPECT_FALSE(is_mv_set(c7, d, VertexSet::from_range(7, oracle::members(mask, 7))));
  }
}

TEST(TmvSet, Examples) {
  const Graph p5 = path_graph(5);
  const DistanceMatrix d5(p5);
  EXPECT_TRUE(is_tmv_set(p5, d5, VertexSet(5, {0, 4})));
  EXPECT_TRUE(is_feasible_tmv_set(p5, d5, VertexSet(5, {0, 4})));
  const Graph c5 = cycle_graph(5);
  const DistanceMatrix dc(c5);
  EXPECT_TRUE(is_tmv_set(c5, dc, c5.empty_set()));
  for (std::size_t mask = 1; mask < 32; ++mask)
    EXPECT_FALSE(is_tmv_set(c5, dc, VertexSet::from_range(5, oracle::members(mask, 5))));
  const Graph c4 = cycle_graph(4);
  EXPECT_FALSE(is_feasible_tmv_set(c4, DistanceMatrix(c4), VertexSet(4, {0, 1})));
}

TEST(TmvSet, IndependentTmvSetsAreFeasible) {
  SplitMix64 rng(107);
  for (const auto& g : corpus(4, 40, 8)) {
    const DistanceMatrix d(g);
    for (int t = 0; t < 10; ++t) {
      const VertexSet x = random_subset(g, rng, 0.3);
      bool independent = true;
      for (Vertex a : x)
        if (g.neighbors(a).intersects(x)) independent = false;
      if (independent && is_tmv_set(g, d, x)) {
        ASSERT_TRUE(is_feasible_tmv_set(g, d, x));
      }
    }
  }
}

TEST(Checkers, DownwardClosed) {
  SplitMix64 rng(109);
  for (const auto& g : corpus(5, 60, 8)) {
    const DistanceMatrix d(g);
    for (int t = 0; t < 6; ++t) {
      const VertexSet x = random_subset(g, rng, 0.5);
      for (SetKind kind : {SetKind::mutual, SetKind::total, SetKind::feasible_total}) {
        if (!satisfies(g, d, x, kind)) continue;
        for (int s = 0; s < 6; ++s) {
          VertexSet y = x;
          for (Vertex v : x)
            if (rng.chance(0.4)) y.erase(v);
          ASSERT_TRUE(satisfies(g, d, y, kind)) << kind_name(kind);
        }
      }
    }
  }
}

TEST(Checkers, RejectDisconnectedAndMismatched) {
  const Graph g = build_graph(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(is_mv_set(g, DistanceMatrix(g), VertexSet(4, {0})), DisconnectedGraph);
  const Graph p3 = path_graph(3);
  EXPECT_THROW(is_mv_set(p3, DistanceMatrix(p3), VertexSet(5)), InvalidArgument);
}

TEST(Certify, ThrowsOnFailure) {
  const Graph c5 = cycle_graph(5);
  const DistanceMatrix d(c5);
  EXPECT_THROW(certify(c5, d, VertexSet(5, {0}), SetKind::total), HypothesisViolation);
  const auto ok = certify(c5, d, VertexSet(5, {0, 1, 3}), SetKind::mutual);
  EXPECT_TRUE(ok.verified);
  EXPECT_EQ(ok.size, 3u);
}

TEST(KindNames, RoundTrip) {
  for (SetKind k : {SetKind::mutual, SetKind::total, SetKind::feasible_total})
    EXPECT_EQ(kind_from_name(kind_name(k)), k);
  EXPECT_FALSE(kind_from_name("weak"));
}

TEST(SolveExact, Examples) {
  EXPECT_EQ(solve_exact(cycle_graph(5), SetKind::mutual).value, 3u);
  EXPECT_EQ(solve_exact(complete_graph(5), SetKind::mutual).value, 5u);
  EXPECT_EQ(solve_exact(strong_product(path_graph(3), path_graph(3)).graph, SetKind::mutual).value, 8u);
  EXPECT_EQ(solve_exact(cycle_graph(6), SetKind::total).value, 0u);
  EXPECT_TRUE(solve_exact(cycle_graph(6), SetKind::total).certificate.set.empty());
  EXPECT_EQ(solve_exact(cycle_graph(4), SetKind::total).value, 2u);
  EXPECT_EQ(solve_exact(path_graph(3), SetKind::total).value, 2u);
  EXPECT_EQ(solve_exact(complete_graph(1), SetKind::mutual).value, 1u);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force(cycle_graph(4), SetKind::mutual).value, 3u);
  EXPECT_EQ(brute_force(path_graph(2), SetKind::mutual).value, 2u);
  EXPECT_THROW(brute_force(cycle_graph(20), SetKind::mutual), CapacityExceeded);
  EXPECT_EQ(brute_force(cycle_graph(9), SetKind::mutual, 9).value, 3u);
}

TEST(SolveExact, MatchesBruteForceAndOracle) {
  for (const auto& g : corpus(6, 60, 8)) {
    const DistanceMatrix d(g);
    for (SetKind kind : {SetKind::mutual, SetKind::total, SetKind::feasible_total}) {
      const auto exact = solve_exact(g, d, kind);
      const auto brute = brute_force(g, d, kind);
      ASSERT_EQ(exact.value, brute.value) << kind_name(kind);
      ASSERT_EQ(exact.certificate.set, brute.certificate.set) << "tie-break differs";
      ASSERT_TRUE(exact.certificate.verified);
      ASSERT_TRUE(exact.exact);
    }
  }
  for (const auto& g : corpus(7, 12, 7)) {
    ASSERT_EQ(solve_exact(g, SetKind::mutual).value, oracle::max_set(g, oracle::mv));
    ASSERT_EQ(solve_exact(g, SetKind::total).value, oracle::max_set(g, oracle::tmv));
  }
}

TEST(SolveExact, TotalNeverExceedsMutual) {
  for (const auto& g : corpus(8, 40, 10)) {
    const DistanceMatrix d(g);
    const auto mu = solve_exact(g, d, SetKind::mutual).value;
    const auto mut = solve_exact(g, d, SetKind::total).value;
    const auto feas = solve_exact(g, d, SetKind::feasible_total).value;
    ASSERT_LE(feas, mut);
    ASSERT_LE(mut, mu);
  }
}

TEST(SolveExact, ThreadCountDoesNotChangeResult) {
  for (const auto& g : corpus(9, 10, 16)) {
    const DistanceMatrix d(g);
    for (SetKind kind : {SetKind::mutual, SetKind::total}) {
      const auto one = solve_exact(g, d, kind);
      SolveOptions opts;
      opts.threads = 4;
      const auto four = solve_exact(g, d, kind, opts);
      ASSERT_EQ(one.value, four.value);
      ASSERT_EQ(one.certificate.set, four.certificate.set);
    }
  }
}

TEST(SolveExact, NodeBudgetReportsInexactButVerified) {
  const Graph g = strong_product(cycle_graph(6), path_graph(3)).graph;
  SolveOptions opts;
  opts.node_budget = 50;
  const auto r = solve_exact(g, SetKind::mutual, opts);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(r.certificate.verified);
  EXPECT_TRUE(is_mv_set(g, DistanceMatrix(g), r.certificate.set));
}

TEST(SolveExact, UpperBoundStopsEarly) {
  const Graph g = strong_product(path_graph(4), path_graph(4)).graph;
  SolveOptions opts;
  opts.upper_bound = 12;
  const auto r = solve_exact(g, SetKind::mutual, opts);
  EXPECT_EQ(r.value, 12u);
  EXPECT_TRUE(r.exact);
}

TEST(SolveExact, EnablingVertexIffLargeMu) {
  // A connected graph has μ ≥ n − 1 exactly when it has an enabling vertex.
  for (const auto& g : corpus(10, 80, 8)) {
    if (g.order() < 2) continue;
    const bool large = solve_exact(g, SetKind::mutual).value + 1 >= g.order();
    ASSERT_EQ(large, enabling_vertices(g).any());
  }
}

TEST(SolveExact, ConvexCoverWithZeroParts) {
  // C5 and C6 glued at a vertex: both cycles are convex with no nonempty tmv set.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  const std::vector<Vertex> second{0, 5, 6, 7, 8, 9};
  for (std::size_t i = 0; i < 6; ++i) edges.emplace_back(second[i], second[(i + 1) % 6]);
  const Graph g = build_graph(10, edges);
  const DistanceMatrix d(g);
  EXPECT_TRUE(is_convex(g, d, VertexSet(10, {0, 1, 2, 3, 4})));
  EXPECT_TRUE(is_convex(g, d, VertexSet(10, {0, 5, 6, 7, 8, 9})));
  EXPECT_EQ(solve_exact(g, SetKind::total).value, 0u);
}

TEST(SolveExact, DisconnectedThrows) {
  EXPECT_THROW(solve_exact(build_graph(3, {{0, 1}}), SetKind::mutual), DisconnectedGraph);
}

TEST(Heuristic, AlwaysVerified) {
  for (const auto& g : corpus(11, 20, 12)) {
    const DistanceMatrix d(g);
    HeuristicOptions opts;
    opts.max_iterations = 500;
    const auto r = heuristic_mv_set(g, d, opts);
    ASSERT_TRUE(r.certificate.verified);
    ASSERT_TRUE(is_mv_set(g, d, r.certificate.set));
    ASSERT_LE(r.certificate.size, solve_exact(g, d, SetKind::mutual).value);
  }
}

TEST(Heuristic, ReachesOptimumOnGrid) {
  const Graph g = strong_product(path_graph(4), path_graph(4)).graph;
  const auto r = heuristic_mv_set(g, DistanceMatrix(g), {});
  EXPECT_EQ(r.certificate.size, 12u);
  EXPECT_EQ(solve_exact(g, SetKind::mutual).value, 12u);
}

TEST(Heuristic, SeedIsReproducible) {
  const Graph g = strong_product(cycle_graph(7), path_graph(3)).graph;
  const DistanceMatrix d(g);
  HeuristicOptions opts;
  opts.seed = 5;
  opts.max_iterations = 3000;
  EXPECT_EQ(heuristic_mv_set(g, d, opts).certificate.set, heuristic_mv_set(g, d, opts).certificate.set);
}
