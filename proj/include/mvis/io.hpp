#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvis/error.hpp"
#include "mvis/families.hpp"
#include "mvis/graph.hpp"
#include "mvis/products.hpp"
#include "mvis/visibility.hpp"

namespace mvis::io {

// ---------------------------------------------------------------------------
// Edge lists
//
//   # any comment
//   # product-orders: 3 2        (optional; marks a row-major strong product)
//   n m
//   u v                          (m lines, 0-based ids)

inline constexpr std::string_view kProductDirective = "# product-orders:";

struct EdgeList {
  Graph graph;
  std::optional<ProductIndex> index;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::size_t parse_count(const std::string& token, const std::string& what, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer for " + what + ", got '" +
                     token + "'");
  try {
    return static_cast<std::size_t>(std::stoull(token));
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": " + what + " out of range");
  }
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

inline EdgeList read_edge_list(std::istream& in) {
  std::optional<std::vector<std::size_t>> orders;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind(kProductDirective, 0) == 0) {
        std::vector<std::size_t> o;
        for (const auto& tok : detail::split_ws(line.substr(kProductDirective.size())))
          o.push_back(detail::parse_count(tok, "factor order", line_no));
        orders = std::move(o);
      }
      continue;
    }
    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    const std::size_t a = detail::parse_count(tokens[0], header ? "endpoint" : "n", line_no);
    const std::size_t b = detail::parse_count(tokens[1], header ? "endpoint" : "m", line_no);
    if (!header) {
      header = {a, b};
      continue;
    }
    if (a >= header->first || b >= header->first)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range 0.." +
                       std::to_string(header->first == 0 ? 0 : header->first - 1));
    if (a == b) throw ParseError("line " + std::to_string(line_no) + ": loop edge");
    edges.emplace_back(a, b);
  }
  if (!header) throw ParseError("missing 'n m' header line");
  if (edges.size() != header->second)
    throw ParseError("header declares " + std::to_string(header->second) + " edges but " +
                     std::to_string(edges.size()) + " were listed");
  EdgeList out{build_graph(header->first, edges), std::nullopt};
  if (orders) {
    ProductIndex index(*orders);
    if (index.order() != out.graph.order()) throw ParseError("product-orders do not multiply to n");
    out.index = std::move(index);
  }
  return out;
}

inline EdgeList read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g, const std::optional<ProductIndex>& index = std::nullopt,
                            const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  if (index) {
    out << kProductDirective;
    for (auto o : index->orders()) out << ' ' << o;
    out << '\n';
  }
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

inline void write_edge_list_file(const std::string& path, const Graph& g,
                                 const std::optional<ProductIndex>& index = std::nullopt,
                                 const std::vector<std::string>& comments = {}) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_edge_list(out, g, index, comments);
}

// ---------------------------------------------------------------------------
// Recipes
//
//   cograph: "start" | "true-twin K" | "false-twin K"
//   cactus:  "root-cycle L" | "attach-cycle AT L" | "attach-path AT L"

inline CographRecipe read_cograph_recipe(std::istream& in) {
  CographRecipe recipe;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = detail::split_ws(line);
    if (tok[0] == "start" && tok.size() == 1) {
      recipe.push_back({CographOp::Kind::start, 0});
    } else if ((tok[0] == "true-twin" || tok[0] == "false-twin") && tok.size() == 2) {
      recipe.push_back({tok[0] == "true-twin" ? CographOp::Kind::true_twin : CographOp::Kind::false_twin,
                        detail::parse_count(tok[1], "twin target", line_no)});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown cograph step '" + line + "'");
    }
  }
  return recipe;
}

inline CactusRecipe read_cactus_recipe(std::istream& in) {
  CactusRecipe recipe;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = detail::split_ws(line);
    if (tok[0] == "root-cycle" && tok.size() == 2) {
      recipe.push_back({CactusOp::Kind::root_cycle, 0, detail::parse_count(tok[1], "length", line_no)});
    } else if ((tok[0] == "attach-cycle" || tok[0] == "attach-path") && tok.size() == 3) {
      recipe.push_back({tok[0] == "attach-cycle" ? CactusOp::Kind::attach_cycle : CactusOp::Kind::attach_path,
                        detail::parse_count(tok[1], "attachment vertex", line_no),
                        detail::parse_count(tok[2], "length", line_no)});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown cactus step '" + line + "'");
    }
  }
  return recipe;
}

// ---------------------------------------------------------------------------
// Certificates (JSON)

inline constexpr std::string_view kCertificateFormat = "mvis-certificate/1";

struct CertificateFile {
  std::optional<Graph> graph;             // inline copy of the graph, if embedded
  std::optional<std::string> graph_file;  // or a reference to an edge-list file
  SetKind kind = SetKind::mutual;
  std::vector<Vertex> set;                // sorted ids
  std::size_t size = 0;
  std::optional<ProductIndex> index;
  bool verified = false;
  std::optional<bool> exact;
  std::optional<std::size_t> formula_value;
  nlohmann::json solver = nlohmann::json::object();

  friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

inline nlohmann::json to_json(const CertificateFile& c) {
  nlohmann::json j;
  j["format"] = kCertificateFormat;
  if (c.graph) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : c.graph->edges()) edges.push_back({u, v});
    j["graph"] = {{"n", c.graph->order()}, {"edges", edges}};
  }
  if (c.graph_file) j["graph_file"] = *c.graph_file;
  j["kind"] = kind_name(c.kind);
  j["set"] = c.set;
  j["size"] = c.size;
  if (c.index) {
    j["product_orders"] = c.index->orders();
    nlohmann::json tuples = nlohmann::json::array();
    for (Vertex v : c.set) tuples.push_back(c.index->decode(v));
    j["product_tuples"] = tuples;
  }
  j["verified"] = c.verified;
  if (c.exact) j["exact"] = *c.exact;
  if (c.formula_value) j["formula_value"] = *c.formula_value;
  j["solver"] = c.solver;
  return j;
}

inline CertificateFile certificate_from_json(const nlohmann::json& j) {
  try {
    CertificateFile c;
    if (!j.contains("format")) throw ParseError("certificate has no format field");
    if (j.at("format").get<std::string>() != kCertificateFormat)
      throw ParseError("unsupported certificate format '" + j.at("format").get<std::string>() + "'");
    if (j.contains("graph")) {
      const auto& g = j.at("graph");
      std::vector<Edge> edges;
      for (const auto& e : g.at("edges")) edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
      c.graph = build_graph(g.at("n").get<std::size_t>(), edges);
    }
    if (j.contains("graph_file")) c.graph_file = j.at("graph_file").get<std::string>();
    const auto kind = kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw ParseError("unknown certificate kind '" + j.at("kind").get<std::string>() + "'");
    c.kind = *kind;
    c.set = j.at("set").get<std::vector<Vertex>>();
    std::sort(c.set.begin(), c.set.end());
    if (std::adjacent_find(c.set.begin(), c.set.end()) != c.set.end())
      throw ParseError("certificate set lists a vertex twice");
    c.size = j.at("size").get<std::size_t>();
    if (j.contains("product_orders")) {
      c.index = ProductIndex(j.at("product_orders").get<std::vector<std::size_t>>());
      if (j.contains("product_tuples")) {
        const auto tuples = j.at("product_tuples").get<std::vector<Tuple>>();
        if (tuples.size() != c.set.size()) throw ParseError("product_tuples and set differ in length");
        for (std::size_t i = 0; i < tuples.size(); ++i)
          if (c.index->encode(tuples[i]) != c.set[i]) throw ParseError("product tuple does not match its id");
      }
    }
    c.verified = j.value("verified", false);
    if (j.contains("exact")) c.exact = j.at("exact").get<bool>();
    if (j.contains("formula_value")) c.formula_value = j.at("formula_value").get<std::size_t>();
    if (j.contains("solver")) c.solver = j.at("solver");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

inline void write_certificate(std::ostream& out, const CertificateFile& c) { out << to_json(c).dump(2) << '\n'; }

inline CertificateFile read_certificate(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

inline CertificateFile read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open certificate '" + path + "'");
  return read_certificate(in);
}

inline void write_certificate_file(const std::string& path, const CertificateFile& c) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_certificate(out, c);
}

/// Certificate file for an in-memory certificate on g.
inline CertificateFile make_certificate_file(const Graph& g, const Certificate& cert,
                                             const std::optional<ProductIndex>& index = std::nullopt) {
  CertificateFile c;
  c.graph = g;
  c.kind = cert.kind;
  c.set = cert.set.to_vector();
  c.size = cert.size;
  c.index = index;
  c.verified = cert.verified;
  return c;
}

// ---------------------------------------------------------------------------
// DOT export (one-way)

inline std::string tuple_label(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

inline void write_dot(std::ostream& out, const Graph& g, const std::optional<ProductIndex>& index = std::nullopt,
                      const std::optional<VertexSet>& highlight = std::nullopt) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << (index ? tuple_label(index->decode(v)) : std::to_string(v)) << '"';
    if (highlight && highlight->contains(v)) out << ", style=filled, fillcolor=\"#d62728\", member=1";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace mvis::io
