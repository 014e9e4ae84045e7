#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/families.hpp"
#include "mvis/graph.hpp"
#include "mvis/metric.hpp"
#include "mvis/products.hpp"
#include "mvis/solver.hpp"
#include "mvis/structure.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

/// A verified set on a (usually product) graph together with the closed-form
/// size it was built to attain.
struct ConstructedSet {
  Graph graph;
  std::optional<ProductIndex> index;
  Certificate certificate;
  std::size_t formula_value = 0;
};

namespace detail {

inline void require_feasible(const Graph& g, const VertexSet& s, const char* which) {
  require_connected(g, which);
  if (g.order() < 2) throw HypothesisViolation(std::string(which) + " must have at least two vertices");
  if (s.capacity() != g.order())
    throw InvalidArgument(std::string(which) + ": set capacity does not match the graph");
  const DistanceMatrix dist(g);
  if (!is_feasible_tmv_set(g, dist, s))
    throw HypothesisViolation(std::string(which) + ": supplied set is not a feasible total mutual-visibility set");
}

inline void require_mv(const Graph& g, const VertexSet& s, const char* which) {
  require_connected(g, which);
  if (s.capacity() != g.order())
    throw InvalidArgument(std::string(which) + ": set capacity does not match the graph");
  const DistanceMatrix dist(g);
  if (!is_mv_set(g, dist, s))
    throw HypothesisViolation(std::string(which) + ": supplied set is not a mutual-visibility set");
}

inline ConstructedSet finish(StrongProduct product, VertexSet set, SetKind kind, std::size_t formula) {
  const DistanceMatrix dist(product.graph);
  ConstructedSet out{std::move(product.graph), std::move(product.index), {}, formula};
  out.certificate = certify(out.graph, dist, std::move(set), kind);
  if (out.certificate.size != formula) {
    throw Error("internal error: constructed set has size " + std::to_string(out.certificate.size) +
                " but the formula gives " + std::to_string(formula));
  }
  return out;
}

}  // namespace detail

/**
 * Feasible total mutual-visibility set of G1 ⊠ ... ⊠ Gk from feasible sets
 * S_i of the factors: every vertex with at least one coordinate in its
 * factor's set. Size is Π n_i − Π (n_i − |S_i|).
 */
inline ConstructedSet multiway_tmv_set(const std::vector<Graph>& factors, const std::vector<VertexSet>& sets) {
  if (factors.empty()) throw InvalidArgument("need at least one factor");
  if (factors.size() != sets.size()) throw InvalidArgument("one set per factor is required");
  std::size_t all = 1, outside = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string which = "factor " + std::to_string(i + 1);
    detail::require_feasible(factors[i], sets[i], which.c_str());
    all *= factors[i].order();
    outside *= factors[i].order() - sets[i].count();
  }
  StrongProduct product = strong_product_multi(factors);
  VertexSet s(product.index.order());
  for (Vertex v = 0; v < product.index.order(); ++v) {
    const Tuple t = product.index.decode(v);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (sets[i].contains(t[i])) {
        s.insert(v);
        break;
      }
    }
  }
  return detail::finish(std::move(product), std::move(s), SetKind::feasible_total, all - outside);
}

/// Two-factor case: S = V(G⊠H) \ (complement(S_G) × complement(S_H)).
inline ConstructedSet product_tmv_set(const Graph& g, const VertexSet& s_g, const Graph& h, const VertexSet& s_h) {
  return multiway_tmv_set({g, h}, {s_g, s_h});
}

/// Lower bound construction for strong prisms of graphs with a feasible set S:
/// the two-factor construction with a single vertex of P2. Size n(G) + |S|.
inline ConstructedSet prism_tmv_set(const Graph& g, const VertexSet& s) {
  return product_tmv_set(g, s, path_graph(2), VertexSet(2, {0}));
}

/// Mutual-visibility set S_G × S_H of G ⊠ H.
inline ConstructedSet product_mv_set(const Graph& g, const VertexSet& s_g, const Graph& h, const VertexSet& s_h) {
  detail::require_mv(g, s_g, "first factor");
  detail::require_mv(h, s_h, "second factor");
  StrongProduct product = strong_product(g, h);
  VertexSet s(product.index.order());
  for (Vertex a : s_g)
    for (Vertex b : s_h) s.insert(product.index.encode(Tuple{a, b}));
  return detail::finish(std::move(product), std::move(s), SetKind::mutual, s_g.count() * s_h.count());
}

/// One full G-layer of G ⊠ P2, a mutual-visibility set of size n(G).
inline ConstructedSet prism_layer_set(const Graph& g) {
  require_connected(g, "prism layer set");
  if (g.order() == 0) throw InvalidArgument("prism of the empty graph");
  StrongProduct product = strong_product(g, path_graph(2));
  VertexSet s = layer(product.index, {std::nullopt, std::size_t{0}}, 0);
  return detail::finish(std::move(product), std::move(s), SetKind::mutual, g.order());
}

/// Non-cut vertices of a connected block graph: a set that is at once a
/// largest mutual-visibility set and a largest total one.
inline Certificate block_graph_mu_set(const Graph& g) {
  if (!is_block_graph(g)) throw HypothesisViolation("input is not a connected block graph");
  const VertexSet s = block_decomposition(g).cut_vertices.complement();
  return certify(g, DistanceMatrix(g), s, SetKind::total);
}

/// In G ⊠ P2 for a block graph G: both copies of every non-cut vertex and
/// one copy of every cut vertex. Size n(G) + μ(G).
inline ConstructedSet block_prism_set(const Graph& g) {
  if (!is_block_graph(g)) throw HypothesisViolation("input is not a connected block graph");
  const VertexSet cut = block_decomposition(g).cut_vertices;
  StrongProduct product = strong_product(g, path_graph(2));
  VertexSet s(product.index.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    s.insert(product.index.encode(Tuple{v, 0}));
    if (!cut.contains(v)) s.insert(product.index.encode(Tuple{v, 1}));
  }
  return detail::finish(std::move(product), std::move(s), SetKind::mutual, 2 * g.order() - cut.count());
}

/// Factors must be connected, non-complete and have a universal vertex; each
/// contributes V(G_i) minus its smallest universal vertex. Size Π n_i − 1.
inline ConstructedSet universal_product_tmv(const std::vector<Graph>& factors) {
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    const std::string which = "factor " + std::to_string(i + 1);
    require_connected(f, which.c_str());
    if (f.is_complete()) throw HypothesisViolation(which + " is complete");
    const VertexSet universal = universal_vertices(f);
    if (universal.empty()) throw HypothesisViolation(which + " has no universal vertex");
    VertexSet s = f.all_vertices();
    s.erase(universal.first());
    sets.push_back(s);
  }
  return multiway_tmv_set(factors, sets);
}

/// Closed form for the mutual-visibility number of C_n ⊠ P2.
inline std::size_t cycle_prism_mu(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle length must be at least 3");
  if (n <= 5) return 6;
  if (n == 6) return 7;
  return n;
}

// ---------------------------------------------------------------------------
// Strong grids

/**
 * Cover of a strong grid by maximal diagonals (ℓ, ℓ+1, ...) and single
 * vertices. Coordinates are 0-based, so the extreme values of coordinate i
 * are 0 and n_i − 1.
 *   initial:    some ℓ_i = 0 and no ℓ_j = n_j − 1 (diagonal start points)
 *   terminal:   last vertex of each diagonal started from `initial`
 *   degenerate: some ℓ_i = 0 and some ℓ_j = n_j − 1 (one-vertex diagonals)
 */
struct GridDiagonalCover {
  VertexSet initial;
  VertexSet terminal;
  VertexSet degenerate;
  std::vector<std::vector<Vertex>> diagonals;  // non-degenerate, at least two vertices each

  /// Every diagonal and every degenerate vertex as one part.
  std::vector<VertexSet> parts() const {
    std::vector<VertexSet> out;
    for (const auto& d : diagonals) out.push_back(VertexSet::from_range(initial.capacity(), d));
    for (Vertex v : degenerate) out.push_back(VertexSet(initial.capacity(), {v}));
    return out;
  }
};

struct GridConstruction {
  ConstructedSet extremal;
  GridDiagonalCover cover;
};

inline GridDiagonalCover grid_diagonal_cover(const ProductIndex& index) {
  const std::size_t n = index.order();
  const auto& dims = index.orders();
  GridDiagonalCover cover{VertexSet(n), VertexSet(n), VertexSet(n), {}};
  for (Vertex v = 0; v < n; ++v) {
    const Tuple t = index.decode(v);
    bool low = false, high = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      low = low || t[i] == 0;
      high = high || t[i] + 1 == dims[i];
    }
    if (low && high) cover.degenerate.insert(v);
    if (low && !high) cover.initial.insert(v);
  }
  for (Vertex start : cover.initial) {
    Tuple t = index.decode(start);
    std::vector<Vertex> diagonal{start};
    while (true) {
      bool can_step = true;
      for (std::size_t i = 0; i < t.size(); ++i) can_step = can_step && t[i] + 1 < dims[i];
      if (!can_step) break;
      for (auto& c : t) ++c;
      diagonal.push_back(index.encode(t));
    }
    cover.terminal.insert(diagonal.back());
    cover.diagonals.push_back(std::move(diagonal));
  }
  return cover;
}

/**
 * The boundary set V_Ext of P_{n1} ⊠ ... ⊠ P_{nk} (every vertex with an
 * extreme coordinate) as a verified feasible total set of size
 * Π n_i − Π (n_i − 2), with the diagonal cover whose hull bound matches it.
 */
inline GridConstruction grid_extremal_set(const std::vector<std::size_t>& path_lengths) {
  if (path_lengths.size() < 2) throw HypothesisViolation("strong grid needs at least two factors");
  std::vector<Graph> factors;
  std::size_t all = 1, inner = 1;
  for (std::size_t len : path_lengths) {
    if (len < 3) throw HypothesisViolation("every path factor needs at least 3 vertices, got " + std::to_string(len));
    factors.push_back(path_graph(len));
    all *= len;
    inner *= len - 2;
  }
  StrongProduct product = strong_product_multi(factors);
  const ProductIndex index = product.index;
  VertexSet ext(index.order());
  for (Vertex v = 0; v < index.order(); ++v) {
    const Tuple t = index.decode(v);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == 0 || t[i] + 1 == path_lengths[i]) {
        ext.insert(v);
        break;
      }
    }
  }
  GridDiagonalCover cover = grid_diagonal_cover(index);
  if (!((cover.initial | cover.terminal | cover.degenerate) == ext))
    throw Error("internal error: diagonal end points do not reproduce the boundary set");
  return {detail::finish(std::move(product), std::move(ext), SetKind::feasible_total, all - inner),
          std::move(cover)};
}

/**
 * Upper bound on the mutual-visibility number from a vertex cover by parts:
 * the sum over parts of the exact value on the subgraph induced by the part's
 * convex hull. Keep the hulls small; each one is solved exactly.
 */
inline std::size_t hull_cover_upper_bound(const Graph& g, const std::vector<VertexSet>& cover,
                                          const SolveOptions& opts = {}) {
  require_connected(g, "hull cover bound");
  VertexSet covered(g.order());
  for (const auto& part : cover) {
    if (part.capacity() != g.order()) throw InvalidArgument("cover part capacity does not match the graph");
    covered |= part;
  }
  if (!(covered == g.all_vertices())) throw InvalidArgument("cover does not contain every vertex");
  const DistanceMatrix dist(g);
  std::size_t bound = 0;
  for (const auto& part : cover) {
    if (part.empty()) continue;
    const InducedSubgraph hull = induced_subgraph(g, convex_hull(g, dist, part));
    bound += solve_exact(hull.graph, SetKind::mutual, opts).value;
  }
  return bound;
}

/// Largest feasible total set of g (exact search); the default input for the
/// product constructions when the caller supplies none.
inline VertexSet canonical_feasible_set(const Graph& g, const SolveOptions& opts = {}) {
  return solve_exact(g, SetKind::feasible_total, opts).certificate.set;
}

}  // namespace mvis
