#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "mvis/error.hpp"
#include "mvis/graph.hpp"
#include "mvis/metric.hpp"
#include "mvis/vertex_set.hpp"

namespace mvis {

enum class SetKind {
  mutual,          // mutual-visibility set
  total,           // total mutual-visibility set
  feasible_total,  // total set whose adjacent members share a neighbour outside it
};

inline std::string_view kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::mutual: return "mv";
    case SetKind::total: return "tmv";
    case SetKind::feasible_total: return "feasible-tmv";
  }
  return "?";
}

inline std::optional<SetKind> kind_from_name(std::string_view name) {
  if (name == "mv") return SetKind::mutual;
  if (name == "tmv") return SetKind::total;
  if (name == "feasible-tmv") return SetKind::feasible_total;
  return std::nullopt;
}

namespace detail {

/**
 * Layered reachability over the u,v-geodesic structure. Layer k holds the
 * vertices at distance k from u and d-k from v; a layer vertex is usable if
 * it is outside X and adjacent to a usable vertex of layer k-1. The pair is
 * visible iff layer d-1 keeps a usable vertex (every such vertex is adjacent
 * to v). Membership of u and v in X never matters.
 */
inline bool pair_visible(const Graph& g, const DistanceMatrix& dist, const VertexSet& blocked, Vertex u,
                         Vertex v) {
  const int d = dist.at(u, v);
  if (d <= 1) return true;
  VertexSet frontier(g.order());
  frontier.insert(u);
  for (int k = 1; k < d; ++k) {
    VertexSet candidates = dist.geodesic_layer(u, v, k);
    candidates -= blocked;
    VertexSet next(g.order());
    for (Vertex w : candidates)
      if (g.neighbors(w).intersects(frontier)) next.insert(w);
    if (next.empty()) return false;
    frontier = next;
  }
  return true;
}

inline void check_inputs(const Graph& g, const DistanceMatrix& dist, const VertexSet& x) {
  if (dist.order() != g.order()) throw InvalidArgument("distance matrix does not match graph");
  if (x.capacity() != g.order()) throw InvalidArgument("vertex set capacity does not match graph order");
  if (!dist.connected()) throw DisconnectedGraph("visibility is defined only for connected graphs");
}

/// Adjacent members of X must share a neighbour outside X.
inline bool adjacent_members_have_outside_common_neighbor(const Graph& g, const VertexSet& x) {
  for (Vertex a : x) {
    for (Vertex b : g.neighbors(a) & x) {
      if (b <= a) continue;
      if (((g.neighbors(a) & g.neighbors(b)) - x).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// True iff some u,v-geodesic has no internal vertex in X.
inline bool is_pair_visible(const Graph& g, const DistanceMatrix& dist, const VertexSet& x, Vertex u,
                            Vertex v) {
  detail::check_inputs(g, dist, x);
  if (u >= g.order() || v >= g.order()) throw InvalidArgument("pair visibility: vertex out of range");
  if (u == v) throw InvalidArgument("pair visibility needs two distinct vertices");
  return detail::pair_visible(g, dist, x, u, v);
}

/// Every pair of members of X is X-visible. Empty sets and singletons qualify.
inline bool is_mv_set(const Graph& g, const DistanceMatrix& dist, const VertexSet& x) {
  detail::check_inputs(g, dist, x);
  for (Vertex a : x)
    for (Vertex b = x.next_from(a + 1); b < x.capacity(); b = x.next_from(b + 1))
      if (!detail::pair_visible(g, dist, x, a, b)) return false;
  return true;
}

/// Every pair of vertices of G, members or not, is X-visible.
inline bool is_tmv_set(const Graph& g, const DistanceMatrix& dist, const VertexSet& x) {
  detail::check_inputs(g, dist, x);
  if (x.empty()) return true;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (!detail::pair_visible(g, dist, x, a, b)) return false;
  return true;
}

inline bool is_feasible_tmv_set(const Graph& g, const DistanceMatrix& dist, const VertexSet& x) {
  return is_tmv_set(g, dist, x) && detail::adjacent_members_have_outside_common_neighbor(g, x);
}

inline bool satisfies(const Graph& g, const DistanceMatrix& dist, const VertexSet& x, SetKind kind) {
  switch (kind) {
    case SetKind::mutual: return is_mv_set(g, dist, x);
    case SetKind::total: return is_tmv_set(g, dist, x);
    case SetKind::feasible_total: return is_feasible_tmv_set(g, dist, x);
  }
  return false;
}

/// A candidate set and the property it claims. `verified` is set only by verify().
struct Certificate {
  VertexSet set;
  SetKind kind = SetKind::mutual;
  std::size_t size = 0;
  bool verified = false;

  Certificate() = default;
  Certificate(VertexSet s, SetKind k) : set(std::move(s)), kind(k), size(set.count()) {}
};

/// Runs the checker for the certificate's kind and records the outcome.
inline bool verify(const Graph& g, const DistanceMatrix& dist, Certificate& cert) {
  cert.size = cert.set.count();
  cert.verified = satisfies(g, dist, cert.set, cert.kind);
  return cert.verified;
}

/// Builds a certificate and verifies it; throws if the check fails.
inline Certificate certify(const Graph& g, const DistanceMatrix& dist, VertexSet set, SetKind kind) {
  Certificate cert(std::move(set), kind);
  if (!verify(g, dist, cert)) {
    throw HypothesisViolation("constructed set failed its " + std::string(kind_name(kind)) + " check");
  }
  return cert;
}

}  // namespace mvis
