#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/graph.hpp"
#include "mvis/metric.hpp"
#include "mvis/random.hpp"
#include "mvis/structure.hpp"

namespace mvis {

// ---------------------------------------------------------------------------
// Recipes

struct CographOp {
  enum class Kind { start, true_twin, false_twin };
  Kind kind = Kind::start;
  Vertex of = 0;

  friend bool operator==(const CographOp&, const CographOp&) = default;
};
using CographRecipe = std::vector<CographOp>;

struct CactusOp {
  enum class Kind { root_cycle, attach_cycle, attach_path };
  Kind kind = Kind::root_cycle;
  Vertex at = 0;
  std::size_t length = 0;

  friend bool operator==(const CactusOp&, const CactusOp&) = default;
};
using CactusRecipe = std::vector<CactusOp>;

/// Builds a cograph by successive splittings. Vertex i is created by op i.
inline Graph build_cograph(const CographRecipe& recipe) {
  if (recipe.empty() || recipe.front().kind != CographOp::Kind::start)
    throw InvalidArgument("cograph recipe must begin with start");
  std::vector<Edge> edges;
  std::vector<VertexSet> nbr;
  const std::size_t n = recipe.size();
  if (n > kMaxVertices) throw CapacityExceeded("cograph recipe too long");
  nbr.push_back(VertexSet(n));
  for (std::size_t i = 1; i < n; ++i) {
    const auto& op = recipe[i];
    if (op.kind == CographOp::Kind::start) throw InvalidArgument("start may only appear first");
    if (op.of >= i) {
      throw InvalidArgument("twin target " + std::to_string(op.of) + " does not exist yet at step " +
                            std::to_string(i));
    }
    VertexSet mine = nbr[op.of];
    if (op.kind == CographOp::Kind::true_twin) mine.insert(op.of);
    for (Vertex w : mine) nbr[w].insert(i);
    nbr.push_back(mine);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : nbr[u])
      if (u < w) edges.emplace_back(u, w);
  return build_graph(n, edges);
}

/// Builds a connected cactus. Vertices are numbered in creation order.
inline Graph build_cactus(const CactusRecipe& recipe) {
  if (recipe.empty() || recipe.front().kind != CactusOp::Kind::root_cycle)
    throw InvalidArgument("cactus recipe must begin with root-cycle");
  std::vector<Edge> edges;
  std::size_t n = 0;
  for (std::size_t i = 0; i < recipe.size(); ++i) {
    const auto& op = recipe[i];
    switch (op.kind) {
      case CactusOp::Kind::root_cycle: {
        if (i != 0) throw InvalidArgument("root-cycle may only appear first");
        if (op.length < 3) throw InvalidArgument("cycle length must be at least 3");
        for (std::size_t k = 0; k < op.length; ++k) edges.emplace_back(k, (k + 1) % op.length);
        n = op.length;
        break;
      }
      case CactusOp::Kind::attach_cycle: {
        if (op.at >= n) throw InvalidArgument("attach-cycle at missing vertex " + std::to_string(op.at));
        if (op.length < 3) throw InvalidArgument("cycle length must be at least 3");
        Vertex prev = op.at;
        for (std::size_t k = 1; k < op.length; ++k) {
          edges.emplace_back(prev, n);
          prev = n++;
        }
        edges.emplace_back(prev, op.at);
        break;
      }
      case CactusOp::Kind::attach_path: {
        if (op.at >= n) throw InvalidArgument("attach-path at missing vertex " + std::to_string(op.at));
        if (op.length < 1) throw InvalidArgument("path length must be at least 1");
        Vertex prev = op.at;
        for (std::size_t k = 0; k < op.length; ++k) {
          edges.emplace_back(prev, n);
          prev = n++;
        }
        break;
      }
    }
  }
  if (n > kMaxVertices) throw CapacityExceeded("cactus recipe exceeds vertex capacity");
  return build_graph(n, edges);
}

/// Random connected cograph recipe on n vertices: the second vertex is a true
/// twin of the first, which forces the join structure and hence connectivity.
inline CographRecipe random_cograph_recipe(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("cograph needs at least one vertex");
  SplitMix64 rng(seed);
  CographRecipe recipe{{CographOp::Kind::start, 0}};
  if (n >= 2) recipe.push_back({CographOp::Kind::true_twin, 0});
  for (std::size_t i = 2; i < n; ++i) {
    auto kind = rng.chance(0.5) ? CographOp::Kind::true_twin : CographOp::Kind::false_twin;
    recipe.push_back({kind, static_cast<Vertex>(rng.uniform(i))});
  }
  return recipe;
}

/// Random cactus recipe with at most max_n vertices.
inline CactusRecipe random_cactus_recipe(std::size_t max_n, std::uint64_t seed) {
  if (max_n < 3) throw InvalidArgument("cactus needs room for a cycle (max_n >= 3)");
  SplitMix64 rng(seed);
  std::size_t root = rng.between(3, std::min<std::size_t>(6, max_n));
  CactusRecipe recipe{{CactusOp::Kind::root_cycle, 0, root}};
  std::size_t n = root;
  const std::size_t attachments = rng.between(0, 4);
  for (std::size_t i = 0; i < attachments && n < max_n; ++i) {
    const std::size_t room = max_n - n;
    const Vertex at = static_cast<Vertex>(rng.uniform(n));
    if (room >= 2 && rng.chance(0.75)) {
      std::size_t len = rng.between(3, std::min<std::size_t>(6, room + 1));
      recipe.push_back({CactusOp::Kind::attach_cycle, at, len});
      n += len - 1;
    } else {
      std::size_t len = rng.between(1, std::min<std::size_t>(2, room));
      recipe.push_back({CactusOp::Kind::attach_path, at, len});
      n += len;
    }
  }
  return recipe;
}

// ---------------------------------------------------------------------------
// Named families

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("path needs at least one vertex");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle length must be at least 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs at least one vertex");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

/// Parts are consecutive id ranges in the given order.
inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  if (parts.size() < 2) throw InvalidArgument("complete multipartite graph needs at least two parts");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] == 0) throw InvalidArgument("multipartite parts must be nonempty");
    part_of.insert(part_of.end(), parts[p], p);
  }
  std::vector<Edge> e;
  for (Vertex i = 0; i < part_of.size(); ++i)
    for (Vertex j = i + 1; j < part_of.size(); ++j)
      if (part_of[i] != part_of[j]) e.emplace_back(i, j);
  return build_graph(part_of.size(), e);
}

/// Independent vertices come first (0..independent-1), then the clique.
inline Graph complete_split(std::size_t independent, std::size_t clique) {
  if (clique < 1) throw InvalidArgument("complete split graph needs a nonempty clique");
  const std::size_t n = independent + clique;
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = std::max(i + 1, independent); j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

/// K_{1,leaves} with the center at 0.
inline Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw InvalidArgument("star needs at least one leaf");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

/// Replaces every edge by a path with `times` new internal vertices. New
/// vertices are numbered after the originals, edge by edge in sorted order.
inline Graph subdivide(const Graph& g, std::size_t times) {
  std::size_t n = g.order();
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) {
    Vertex prev = u;
    for (std::size_t k = 0; k < times; ++k) {
      e.emplace_back(prev, n);
      prev = n++;
    }
    e.emplace_back(prev, v);
  }
  if (n > kMaxVertices) throw CapacityExceeded("subdivision exceeds vertex capacity");
  return build_graph(n, e);
}

inline Graph subdivided_star(std::size_t legs, std::size_t subdivisions) {
  return subdivide(star_graph(legs), subdivisions);
}

/// Each vertex i > 0 hangs off a uniformly chosen earlier vertex.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("tree needs at least one vertex");
  SplitMix64 rng(seed);
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(rng.uniform(i)), i);
  return build_graph(n, e);
}

/// Connected block graph grown from K1: each new vertex either joins every
/// vertex of an existing block (enlarging that clique) or hangs as a pendant
/// off an existing vertex (a new K2 block), with equal probability.
inline Graph random_block_graph(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("block graph needs at least one vertex");
  if (n > kMaxVertices) throw CapacityExceeded("block graph exceeds vertex capacity");
  SplitMix64 rng(seed);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) {
    if (!blocks.empty() && rng.chance(0.5)) {
      auto& block = blocks[rng.uniform(blocks.size())];
      for (Vertex w : block) e.emplace_back(w, i);
      block.push_back(i);
    } else {
      const Vertex x = static_cast<Vertex>(rng.uniform(i));
      e.emplace_back(x, i);
      blocks.push_back({x, i});
    }
  }
  return build_graph(n, e);
}

/// Random spanning tree plus each remaining pair independently with
/// probability extra_edge_probability. Always connected.
inline Graph random_connected(std::size_t n, double extra_edge_probability, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("graph needs at least one vertex");
  SplitMix64 rng(seed);
  SplitMix64 tree_rng = rng.split();
  std::vector<Edge> e;
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (Vertex i = 1; i < n; ++i) {
    Vertex p = static_cast<Vertex>(tree_rng.uniform(i));
    e.emplace_back(p, i);
    adj[p].insert(i);
  }
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!adj[i].contains(j) && rng.chance(extra_edge_probability)) e.emplace_back(i, j);
  return build_graph(n, e);
}

// ---------------------------------------------------------------------------
// Spec-driven generation

enum class FamilyKind {
  path,
  cycle,
  complete,
  complete_multipartite,
  complete_split,
  star,
  subdivided_star,
  random_tree,
  random_block_graph,
  cograph,
  cactus,
  random_connected,
};

inline constexpr std::pair<FamilyKind, std::string_view> kFamilyNames[] = {
    {FamilyKind::path, "path"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::complete, "complete"},
    {FamilyKind::complete_multipartite, "complete-multipartite"},
    {FamilyKind::complete_split, "complete-split"},
    {FamilyKind::star, "star"},
    {FamilyKind::subdivided_star, "subdivided-star"},
    {FamilyKind::random_tree, "random-tree"},
    {FamilyKind::random_block_graph, "random-block-graph"},
    {FamilyKind::cograph, "cograph"},
    {FamilyKind::cactus, "cactus"},
    {FamilyKind::random_connected, "random-connected"},
};

inline std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (const auto& [kind, text] : kFamilyNames)
    if (text == name) return kind;
  return std::nullopt;
}

inline std::string_view family_name(FamilyKind kind) {
  for (const auto& [k, text] : kFamilyNames)
    if (k == kind) return text;
  return "?";
}

/**
 * Parameters for generate(). Which fields matter depends on the kind:
 *   path/cycle/complete/random-*: n;  star: n leaves;
 *   complete-multipartite: parts;  complete-split: independent, clique;
 *   subdivided-star: legs, subdivisions;
 *   cograph/cactus: recipe, or n (max n for cactus) with seed;
 *   random-connected: n, edge_probability.
 */
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::size_t n = 0;
  std::vector<std::size_t> parts;
  std::size_t independent = 0;
  std::size_t clique = 0;
  std::size_t legs = 0;
  std::size_t subdivisions = 0;
  double edge_probability = 0.3;
  std::uint64_t seed = 0;
  std::optional<CographRecipe> cograph_recipe;
  std::optional<CactusRecipe> cactus_recipe;
};

inline Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path: return path_graph(spec.n);
    case FamilyKind::cycle: return cycle_graph(spec.n);
    case FamilyKind::complete: return complete_graph(spec.n);
    case FamilyKind::complete_multipartite: return complete_multipartite(spec.parts);
    case FamilyKind::complete_split: return complete_split(spec.independent, spec.clique);
    case FamilyKind::star: return star_graph(spec.n);
    case FamilyKind::subdivided_star:
      if (spec.legs < 1) throw InvalidArgument("subdivided star needs at least one leg");
      return subdivided_star(spec.legs, spec.subdivisions);
    case FamilyKind::random_tree: return random_tree(spec.n, spec.seed);
    case FamilyKind::random_block_graph: return random_block_graph(spec.n, spec.seed);
    case FamilyKind::cograph:
      return build_cograph(spec.cograph_recipe ? *spec.cograph_recipe
                                               : random_cograph_recipe(spec.n, spec.seed));
    case FamilyKind::cactus:
      return build_cactus(spec.cactus_recipe ? *spec.cactus_recipe
                                             : random_cactus_recipe(spec.n, spec.seed));
    case FamilyKind::random_connected:
      if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0)
        throw InvalidArgument("edge probability must lie in [0,1]");
      return random_connected(spec.n, spec.edge_probability, spec.seed);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace mvis
