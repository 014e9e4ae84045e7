#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/graph.hpp"
#include "mvis/metric.hpp"
#include "mvis/vertex_set.hpp"

namespace mvis {

using Tuple = std::vector<std::size_t>;

/**
 * Row-major bijection between factor-vertex tuples and product ids. The first
 * factor is the slowest-varying coordinate.
 */
class ProductIndex {
 public:
  ProductIndex() = default;

  explicit ProductIndex(std::vector<std::size_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw InvalidArgument("product index needs at least one factor");
    strides_.assign(orders_.size(), 1);
    std::size_t total = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      if (orders_[i] == 0) throw InvalidArgument("product factor of order zero");
      strides_[i] = total;
      if (total > kMaxVertices / orders_[i]) {
        throw CapacityExceeded("product order exceeds vertex capacity " + std::to_string(kMaxVertices));
      }
      total *= orders_[i];
    }
    total_ = total;
  }

  std::size_t factors() const noexcept { return orders_.size(); }
  std::size_t order() const noexcept { return total_; }
  const std::vector<std::size_t>& orders() const noexcept { return orders_; }

  Vertex encode(std::span<const std::size_t> tuple) const {
    if (tuple.size() != orders_.size()) throw InvalidArgument("tuple has wrong arity");
    Vertex id = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] >= orders_[i]) throw InvalidArgument("tuple coordinate out of range");
      id += tuple[i] * strides_[i];
    }
    return id;
  }

  Tuple decode(Vertex id) const {
    if (id >= total_) throw InvalidArgument("product id out of range");
    Tuple t(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      t[i] = id / strides_[i];
      id %= strides_[i];
    }
    return t;
  }

  std::size_t coordinate(Vertex id, std::size_t position) const {
    return (id / strides_.at(position)) % orders_[position];
  }

  friend bool operator==(const ProductIndex&, const ProductIndex&) = default;

 private:
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
};

struct StrongProduct {
  Graph graph;
  ProductIndex index;
};

namespace detail {

/// Strong product of an already indexed graph with one more factor.
inline Graph strong_product_graph(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  std::vector<Edge> edges;
  auto id = [nh](Vertex a, Vertex b) { return a * nh + b; };
  for (Vertex a = 0; a < ng; ++a) {
    const VertexSet ca = g.closed_neighbors(a);
    for (Vertex b = 0; b < nh; ++b) {
      const VertexSet cb = h.closed_neighbors(b);
      for (Vertex a2 : ca) {
        for (Vertex b2 : cb) {
          const Vertex u = id(a, b), v = id(a2, b2);
          if (u < v) edges.emplace_back(u, v);
        }
      }
    }
  }
  return build_graph(ng * nh, edges);
}

}  // namespace detail

/// G ⊠ H: (g,h) ~ (g',h') iff the coordinates are equal-or-adjacent in both
/// factors and the pairs differ.
inline StrongProduct strong_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw InvalidArgument("strong product of an empty factor");
  ProductIndex index({g.order(), h.order()});
  return {detail::strong_product_graph(g, h), std::move(index)};
}

/// G1 ⊠ ... ⊠ Gk, indexed row-major over all k factors.
inline StrongProduct strong_product(std::span<const Graph> factors) {
  if (factors.empty()) throw InvalidArgument("strong product of an empty factor list");
  std::vector<std::size_t> orders;
  for (const auto& f : factors) {
    if (f.order() == 0) throw InvalidArgument("strong product of an empty factor");
    orders.push_back(f.order());
  }
  ProductIndex index(orders);  // validates capacity before any work
  Graph acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = detail::strong_product_graph(acc, factors[i]);
  return {std::move(acc), std::move(index)};
}

inline StrongProduct strong_product_multi(const std::vector<Graph>& factors) {
  return strong_product(std::span<const Graph>(factors));
}

/**
 * The layer through `fixed` along `free_position`: all product vertices that
 * agree with `fixed` on every other coordinate. `fixed` must leave exactly the
 * free position unset.
 */
inline VertexSet layer(const ProductIndex& index, const std::vector<std::optional<std::size_t>>& fixed,
                       std::size_t free_position) {
  if (fixed.size() != index.factors() || free_position >= index.factors())
    throw InvalidArgument("layer: partial tuple has wrong arity");
  Tuple t(index.factors());
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (i == free_position) {
      if (fixed[i].has_value()) throw InvalidArgument("layer: free position must be unset");
      continue;
    }
    if (!fixed[i].has_value()) throw InvalidArgument("layer: non-free position left unset");
    if (*fixed[i] >= index.orders()[i]) throw InvalidArgument("layer: coordinate out of range");
    t[i] = *fixed[i];
  }
  VertexSet out(index.order());
  for (std::size_t c = 0; c < index.orders()[free_position]; ++c) {
    t[free_position] = c;
    out.insert(index.encode(t));
  }
  return out;
}

/// Verifies d((g,h),(g',h')) = max(d_G(g,g'), d_H(h,h')) for every pair.
inline bool check_distance_law(const Graph& g, const Graph& h, const StrongProduct& product) {
  require_connected(g, "distance law");
  require_connected(h, "distance law");
  const DistanceMatrix dg(g), dh(h), dp(product.graph);
  const auto& idx = product.index;
  for (Vertex u = 0; u < idx.order(); ++u) {
    const auto tu = idx.decode(u);
    for (Vertex v = 0; v < idx.order(); ++v) {
      const auto tv = idx.decode(v);
      if (dp.at(u, v) != std::max(dg.at(tu[0], tv[0]), dh.at(tu[1], tv[1]))) return false;
    }
  }
  return true;
}

}  // namespace mvis
