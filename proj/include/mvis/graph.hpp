#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/vertex_set.hpp"

namespace mvis {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple undirected graph on the vertices 0..n-1.
 *
 * Adjacency is kept as one VertexSet row per vertex, which makes neighborhood
 * algebra (intersections, twin tests, frontier expansion) word-parallel.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges collapse; loops and
  /// out-of-range endpoints are rejected.
  Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
    if (n > kMaxVertices) {
      throw CapacityExceeded("graph order " + std::to_string(n) + " exceeds limit " +
                             std::to_string(kMaxVertices));
    }
    adj_.assign(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      }
      if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
    for (const auto& row : adj_) m_ += row.count();
    m_ /= 2;
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = adj_.at(v);
    s.insert(v);
    return s;
  }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).count(); }

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = adj_[u].next_from(u + 1); v < n_; v = adj_[u].next_from(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  std::size_t min_degree() const {
    std::size_t best = n_ == 0 ? 0 : n_ - 1;
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  bool is_complete() const { return 2 * m_ == n_ * (n_ == 0 ? 0 : n_ - 1); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
};

inline Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  return Graph(n, std::span<const Edge>(edges));
}

/// Induced subgraph together with the map from new ids to original ids
/// (new id i is the i-th smallest member of the kept set).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> original = keep.to_vector();
  std::vector<std::size_t> local(g.order(), g.order());
  for (std::size_t i = 0; i < original.size(); ++i) local[original[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(local[u], local[v]);
  return {Graph(original.size(), std::span<const Edge>(edges)), std::move(original)};
}

}  // namespace mvis
