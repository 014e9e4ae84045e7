#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/graph.hpp"
#include "mvis/vertex_set.hpp"

namespace mvis {

/**
 * All-pairs hop distances of one graph, plus the distance spheres
 * S_k(u) = {w : d(u,w) = k} that the interval and visibility routines
 * intersect word-wise.
 */
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;

  explicit DistanceMatrix(const Graph& g)
      : n_(g.order()), d_(n_ * n_, kUnreachable), empty_(n_) {
    std::vector<Vertex> queue(n_);
    sphere_offset_.assign(n_ + 1, 0);
    for (Vertex src = 0; src < n_; ++src) {
      int* row = &d_[src * n_];
      std::size_t head = 0, tail = 0;
      row[src] = 0;
      queue[tail++] = src;
      int ecc = 0;
      while (head < tail) {
        Vertex u = queue[head++];
        for (Vertex w : g.neighbors(u)) {
          if (row[w] == kUnreachable) {
            row[w] = row[u] + 1;
            ecc = row[w];
            queue[tail++] = w;
          }
        }
      }
      if (tail != n_) connected_ = false;
      sphere_offset_[src + 1] = sphere_offset_[src] + static_cast<std::size_t>(ecc) + 1;
    }
    spheres_.assign(sphere_offset_[n_], VertexSet(n_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex w = 0; w < n_; ++w)
        if (int k = at(u, w); k != kUnreachable) spheres_[sphere_offset_[u] + k].insert(w);
  }

  std::size_t order() const noexcept { return n_; }
  bool connected() const noexcept { return connected_; }

  int at(Vertex u, Vertex v) const noexcept { return d_[u * n_ + v]; }
  int operator()(Vertex u, Vertex v) const noexcept { return at(u, v); }

  /// Largest finite distance from u.
  int eccentricity(Vertex u) const noexcept {
    return static_cast<int>(sphere_offset_[u + 1] - sphere_offset_[u]) - 1;
  }

  /// {w : d(u,w) = k}; empty when k is beyond u's eccentricity.
  const VertexSet& sphere(Vertex u, int k) const {
    if (k < 0 || k > eccentricity(u)) return empty_sphere();
    return spheres_[sphere_offset_[u] + static_cast<std::size_t>(k)];
  }

  /// Vertices w with d(u,w) = k and d(w,v) = d(u,v) - k, i.e. layer k of the
  /// u,v-geodesic structure. Assumes u, v connected.
  VertexSet geodesic_layer(Vertex u, Vertex v, int k) const {
    return sphere(u, k) & sphere(v, at(u, v) - k);
  }

 private:
  const VertexSet& empty_sphere() const noexcept { return empty_; }

  std::size_t n_ = 0;
  bool connected_ = true;
  std::vector<int> d_;
  std::vector<std::size_t> sphere_offset_;
  std::vector<VertexSet> spheres_;
  VertexSet empty_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

/// True iff every vertex is reachable from vertex 0. K0 and K1 count as connected.
inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen(g.order());
  std::vector<Vertex> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u) - seen) {
      seen.insert(w);
      stack.push_back(w);
    }
  }
  return seen.count() == g.order();
}

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw DisconnectedGraph(std::string(what) + " requires a connected graph");
}

/// All vertices on at least one u,v-geodesic, endpoints included.
inline VertexSet geodesic_interval(const DistanceMatrix& dist, Vertex u, Vertex v) {
  const int d = dist.at(u, v);
  if (d == DistanceMatrix::kUnreachable) {
    throw DisconnectedGraph("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " are not connected");
  }
  VertexSet out(dist.order());
  for (int k = 0; k <= d; ++k) out |= dist.geodesic_layer(u, v, k);
  return out;
}

inline VertexSet geodesic_interval(const Graph& g, const DistanceMatrix& dist, Vertex u, Vertex v) {
  (void)g;
  return geodesic_interval(dist, u, v);
}

/// True iff S is closed under geodesic intervals. Pairs in different
/// components have no geodesics and impose nothing.
inline bool is_convex(const Graph& g, const DistanceMatrix& dist, const VertexSet& s) {
  (void)g;
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (dist.at(members[i], members[j]) == DistanceMatrix::kUnreachable) continue;
      if (!geodesic_interval(dist, members[i], members[j]).is_subset_of(s)) return false;
    }
  }
  return true;
}

/// Smallest convex superset of S, by closing under geodesic intervals until
/// nothing changes.
inline VertexSet convex_hull(const Graph& g, const DistanceMatrix& dist, const VertexSet& s) {
  require_connected(g, "convex hull");
  VertexSet hull = s;
  bool grew = true;
  while (grew) {
    grew = false;
    const auto members = hull.to_vector();
    VertexSet next = hull;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        next |= geodesic_interval(dist, members[i], members[j]);
    if (!(next == hull)) {
      hull = next;
      grew = true;
    }
  }
  return hull;
}

}  // namespace mvis
