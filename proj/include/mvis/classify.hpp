#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/families.hpp"
#include "mvis/graph.hpp"
#include "mvis/metric.hpp"
#include "mvis/structure.hpp"

namespace mvis {

enum class ClassifiedFamily { cograph, cactus, block, generic };

inline std::string_view family_label(ClassifiedFamily f) {
  switch (f) {
    case ClassifiedFamily::cograph: return "cograph";
    case ClassifiedFamily::cactus: return "cactus";
    case ClassifiedFamily::block: return "block";
    case ClassifiedFamily::generic: return "generic";
  }
  return "?";
}

struct Verdict {
  std::string name;
  long long value = 0;  // booleans are 0/1
};

/// Facts about a graph that a structural characterization licenses without
/// running a search. Only facts valid for the family are listed.
struct Classification {
  ClassifiedFamily family = ClassifiedFamily::generic;
  std::vector<Verdict> verdicts;

  std::optional<long long> value(std::string_view name) const {
    for (const auto& v : verdicts)
      if (v.name == name) return v.value;
    return std::nullopt;
  }
  bool flag(std::string_view name) const { return value(name).value_or(0) != 0; }
};

/**
 * Connected cographs: equal mutual and total mutual-visibility numbers iff
 * there is a universal vertex or no enabling vertex. Also reports the
 * mutual-visibility number, which is n for complete graphs, n − 1 with a
 * universal or an enabling vertex, and n − 2 otherwise.
 */
inline Classification classify_cograph_graph(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("cograph recipe builds a disconnected graph");
  const std::size_t n = g.order();
  Classification out{ClassifiedFamily::cograph, {}};
  if (n <= 1) {
    out.verdicts = {{"universal-vertex", 1}, {"enabling-vertex", 0}, {"mu-mut-graph", 1},
                    {"mu", static_cast<long long>(n)}, {"mu-total", static_cast<long long>(n)}};
    return out;
  }
  const bool universal = universal_vertices(g).any();
  const bool enabling = enabling_vertices(g).any();
  const bool equal = universal || !enabling;
  long long mu = static_cast<long long>(n) - 2;
  if (g.is_complete()) mu = static_cast<long long>(n);
  else if (universal || enabling) mu = static_cast<long long>(n) - 1;
  out.verdicts = {{"universal-vertex", universal}, {"enabling-vertex", enabling}, {"mu-mut-graph", equal}, {"mu", mu}};
  if (equal) out.verdicts.push_back({"mu-total", mu});
  return out;
}

inline Classification classify_cograph(const CographRecipe& recipe) {
  return classify_cograph_graph(build_cograph(recipe));
}

/**
 * Cacti: no nonempty total mutual-visibility set exists iff the minimum
 * degree is 2 and every cycle block of length at most 4 has all of its
 * vertices of degree at least 3.
 */
inline Classification classify_cactus(const Graph& g) {
  if (!is_cactus(g)) throw HypothesisViolation("input is not a connected cactus");
  Classification out{ClassifiedFamily::cactus, {}};
  const std::size_t min_deg = g.order() == 0 ? 0 : g.min_degree();
  bool short_cycles_ok = true;
  if (g.order() >= 2) {
    for (const auto& block : block_decomposition(g).blocks) {
      if (!is_cycle_block(g, block) || block.count() > 4) continue;
      for (Vertex v : block)
        if (g.degree(v) < 3) short_cycles_ok = false;
    }
  }
  const bool zero = min_deg >= 2 && short_cycles_ok;
  out.verdicts = {{"min-degree", static_cast<long long>(min_deg)},
                  {"short-cycles-branch", short_cycles_ok},
                  {"mu-total-zero", zero}};
  return out;
}

}  // namespace mvis
