#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/graph.hpp"
#include "mvis/metric.hpp"
#include "mvis/vertex_set.hpp"

namespace mvis {

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // maximal 2-connected components (bridges count as K2 blocks)
  VertexSet cut_vertices;
};

/**
 * Biconnected components via the usual lowpoint DFS with an edge stack.
 *
 * Blocks are reported in the order their DFS subtree closes. K1 yields a
 * single one-vertex block.
 */
inline BlockDecomposition block_decomposition(const Graph& g) {
  require_connected(g, "block decomposition");
  const std::size_t n = g.order();
  BlockDecomposition out{{}, VertexSet(n)};
  if (n == 0) return out;
  if (n == 1) {
    out.blocks.push_back(VertexSet(1, {0}));
    return out;
  }

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  int time = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = time++;
    std::size_t children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (disc[w] == -1) {
        ++children;
        edge_stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent != n || children > 1) out.cut_vertices.insert(u);
          VertexSet block(n);
          while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e.first == u && e.second == w) break;
          }
          out.blocks.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        edge_stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(0, n);
  return out;
}

/// Every block is a clique.
inline bool is_block_graph(const Graph& g) {
  if (!is_connected(g)) return false;
  for (const auto& block : block_decomposition(g).blocks)
    for (Vertex v : block)
      if (!((block - g.closed_neighbors(v)).empty())) return false;
  return true;
}

/// Number of edges of g with both ends in s.
inline std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  for (Vertex v : s) twice += (g.neighbors(v) & s).count();
  return twice / 2;
}

/// A 2-connected block is a cycle exactly when it has as many edges as vertices.
inline bool is_cycle_block(const Graph& g, const VertexSet& block) {
  const std::size_t k = block.count();
  return k >= 3 && induced_edge_count(g, block) == k;
}

/// Every block is a cycle or a single edge.
inline bool is_cactus(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.order() <= 1) return true;
  for (const auto& block : block_decomposition(g).blocks)
    if (block.count() != 2 && !is_cycle_block(g, block)) return false;
  return true;
}

inline VertexSet universal_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) out.insert(v);
  return out;
}

/**
 * Vertices v such that every u != v whose degree in G - v is below n - 2
 * is a neighbor of v. A graph has one iff it admits a mutual-visibility set
 * of size n - 1.
 */
inline VertexSet enabling_vertices(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw InvalidArgument("enabling vertices need at least two vertices");
  VertexSet out(n);
  for (Vertex v = 0; v < n; ++v) {
    bool enabling = true;
    for (Vertex u = 0; u < n && enabling; ++u) {
      if (u == v) continue;
      const std::size_t deg_without_v = g.degree(u) - (g.adjacent(u, v) ? 1 : 0);
      if (deg_without_v + 2 < n && !g.adjacent(u, v)) enabling = false;
    }
    if (enabling) out.insert(v);
  }
  return out;
}

enum class TwinRelation { none, true_twin, false_twin };

inline TwinRelation twin_relation(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("twin relation needs two distinct vertices");
  if (u >= g.order() || v >= g.order()) throw InvalidArgument("twin relation: vertex out of range");
  if (g.adjacent(u, v)) {
    return g.closed_neighbors(u) == g.closed_neighbors(v) ? TwinRelation::true_twin
                                                          : TwinRelation::none;
  }
  return g.neighbors(u) == g.neighbors(v) ? TwinRelation::false_twin : TwinRelation::none;
}

}  // namespace mvis
