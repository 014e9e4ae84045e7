#pragma once

// Command-line front end. Tests call run() directly.
//
// Certificates and edge lists go to stdout unless --out is given, in which
// case the one-line summary takes their place on stdout.
//
// Exit codes: 0 success / verified, 1 verification or hypothesis failure,
// 2 usage or parse error, 3 budget exceeded (best lower bound still written).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvis/mvis.hpp"

namespace mvis::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

namespace detail {

struct BudgetFlags {
  unsigned threads = 1;
  std::uint64_t node_budget = 0;
  double time_budget = 0;  // seconds
  std::size_t oracle_limit = 18;
  std::uint64_t seed = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--threads", threads, "solver worker threads")->check(CLI::Range(1u, 256u));
    cmd->add_option("--node-budget", node_budget, "stop after this many search nodes (0 = unlimited)");
    cmd->add_option("--time-budget", time_budget, "stop after this many seconds (0 = unlimited)");
    cmd->add_option("--oracle-limit", oracle_limit, "largest order the brute-force oracle accepts");
    cmd->add_option("--seed", seed, "seed for randomized steps");
  }

  SolveOptions solve() const {
    SolveOptions o;
    o.threads = threads;
    o.node_budget = node_budget;
    o.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(time_budget * 1000.0));
    o.oracle_limit = oracle_limit;
    return o;
  }

  nlohmann::json metadata() const {
    return {{"seed", seed},
            {"threads", threads},
            {"node_budget", node_budget},
            {"time_budget_seconds", time_budget},
            {"oracle_limit", oracle_limit}};
  }
};

/// Parses "0,4;0,4" into one VertexSet per factor.
inline std::vector<VertexSet> parse_sets(const std::string& text, const std::vector<Graph>& factors) {
  std::vector<VertexSet> out;
  std::stringstream groups(text);
  std::string group;
  std::size_t i = 0;
  while (std::getline(groups, group, ';')) {
    if (i >= factors.size()) throw ParseError("--sets lists more groups than there are factors");
    VertexSet s(factors[i].order());
    std::stringstream ids(group);
    std::string id;
    while (std::getline(ids, id, ',')) {
      if (id.empty()) continue;
      std::size_t v = 0;
      try {
        v = std::stoul(id);
      } catch (const std::exception&) {
        throw ParseError("--sets: '" + id + "' is not a vertex id");
      }
      if (v >= factors[i].order()) throw ParseError("--sets: vertex " + id + " out of range");
      s.insert(v);
    }
    out.push_back(s);
    ++i;
  }
  if (out.size() != factors.size()) throw ParseError("--sets needs one group per factor");
  return out;
}

inline std::vector<Graph> load_factors(const std::vector<std::string>& files) {
  std::vector<Graph> factors;
  for (const auto& f : files) factors.push_back(io::read_edge_list_file(f).graph);
  return factors;
}

inline bool to_stdout(const std::string& path) { return path.empty() || path == "-"; }

inline void emit_certificate(const io::CertificateFile& c, const std::string& out_path, std::ostream& out) {
  if (to_stdout(out_path)) {
    io::write_certificate(out, c);
  } else {
    io::write_certificate_file(out_path, c);
  }
}

}  // namespace detail

/**
 * Runs one CLI invocation. argv[0] is the program name.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutual-visibility and total mutual-visibility sets in graphs and strong products"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // gen -------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a graph family member");
  std::string family, recipe_file, gen_out;
  FamilySpec spec;
  std::string parts_text;
  gen->add_option("--family", family, "family name")->required();
  gen->add_option("--n", spec.n, "order (star: number of leaves; cactus: max order)");
  gen->add_option("--parts", parts_text, "part sizes for complete-multipartite, e.g. 2,3,3");
  gen->add_option("--independent", spec.independent, "independent-set size for complete-split");
  gen->add_option("--clique", spec.clique, "clique size for complete-split");
  gen->add_option("--legs", spec.legs, "legs of a subdivided star");
  gen->add_option("--subdivisions", spec.subdivisions, "new vertices per star edge");
  gen->add_option("--p", spec.edge_probability, "extra edge probability for random-connected");
  gen->add_option("--seed", spec.seed, "seed for randomized families");
  gen->add_option("--recipe", recipe_file, "cograph or cactus recipe file");
  gen->add_option("--out", gen_out, "output edge-list file (default: stdout)");

  // product ---------------------------------------------------------------
  auto* product = app.add_subcommand("product", "strong product of edge-list files");
  std::vector<std::string> product_factors;
  std::string product_out;
  product->add_option("--factors", product_factors, "factor edge-list files")->required()->delimiter(',');
  product->add_option("--out", product_out, "output edge-list file (default: stdout)");

  // mu --------------------------------------------------------------------
  auto* mu = app.add_subcommand("mu", "compute the (total) mutual-visibility number");
  std::string mu_graph, mu_kind = "mv", mu_method = "exact", mu_out;
  std::uint64_t mu_iterations = 200000;
  detail::BudgetFlags mu_budget;
  mu->add_option("--graph", mu_graph, "edge-list file")->required();
  mu->add_option("--kind", mu_kind, "mv, tmv or feasible-tmv")->check(CLI::IsMember({"mv", "tmv", "feasible-tmv"}));
  mu->add_option("--method", mu_method, "exact, brute or heuristic")->check(CLI::IsMember({"exact", "brute", "heuristic"}));
  mu->add_option("--iterations", mu_iterations, "heuristic iteration budget");
  std::size_t mu_target = 0;
  mu->add_option("--target", mu_target, "heuristic stops once this size is reached");
  mu->add_option("--out", mu_out, "certificate output file (default: stdout)");
  mu_budget.add_to(mu);

  // check -----------------------------------------------------------------
  auto* check = app.add_subcommand("check", "verify a certificate");
  std::string check_graph, check_cert;
  check->add_option("--graph", check_graph, "edge-list file (default: the graph embedded in the certificate)");
  check->add_option("--cert", check_cert, "certificate file")->required();

  // construct -------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build a certified set from a closed-form construction");
  std::string theorem, construct_graph, sets_text, construct_out;
  std::vector<std::string> construct_factors;
  std::vector<std::size_t> dims;
  detail::BudgetFlags construct_budget;
  construct
      ->add_option("--theorem", theorem,
                   "thm4.1 (two-factor total set), cor4.2 (k factors), thm4.4 (strong grid), cor4.5 (universal "
                   "factors), thm4.6 (product of mv sets), thm5.1 (prism layer), thm5.2 (prism total set), thm5.4 "
                   "(block prism), blockmu (block graph)")
      ->required()
      ->check(CLI::IsMember({"thm4.1", "cor4.2", "thm4.4", "cor4.5", "thm4.6", "thm5.1", "thm5.2", "thm5.4", "blockmu"}));
  construct->add_option("--graph", construct_graph, "edge-list file (single-graph constructions)");
  construct->add_option("--factors", construct_factors, "factor edge-list files")->delimiter(',');
  construct->add_option("--dims", dims, "path orders of a strong grid, e.g. 5,6")->delimiter(',');
  construct->add_option("--sets", sets_text, "factor sets, e.g. '0,4;0,2' (default: computed)");
  construct->add_option("--out", construct_out, "certificate output file (default: stdout)");
  construct_budget.add_to(construct);

  // table -----------------------------------------------------------------
  auto* table = app.add_subcommand("table", "run an experiment and print one row per instance");
  std::string experiment, table_format = "text", table_family;
  ExperimentParams params;
  std::size_t tmin = 0, tmax = 0, tcount = 0, tmax_n = 0;
  std::uint64_t table_iterations = 0;
  detail::BudgetFlags table_budget;
  std::vector<std::string> experiment_names(std::begin(kExperiments), std::end(kExperiments));
  table->add_option("--experiment", experiment, "experiment name")->required()->check(CLI::IsMember(experiment_names));
  table->add_option("--min", tmin, "smallest size parameter");
  table->add_option("--max", tmax, "largest size parameter");
  table->add_option("--count", tcount, "number of random instances");
  table->add_option("--max-n", tmax_n, "largest order of random instances");
  table->add_option("--family", table_family, "family for prism-open-question");
  table->add_option("--iterations", table_iterations, "heuristic iteration budget");
  table->add_option("--format", table_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  table_budget.add_to(table);

  // export ----------------------------------------------------------------
  auto* exp = app.add_subcommand("export", "export a graph as Graphviz DOT");
  std::string export_graph, export_format = "dot", export_cert, export_out;
  exp->add_option("--graph", export_graph, "edge-list file")->required();
  exp->add_option("--format", export_format, "output format")->check(CLI::IsMember({"dot"}));
  exp->add_option("--highlight", export_cert, "certificate whose vertices are marked");
  exp->add_option("--out", export_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      const auto kind = family_from_name(family);
      if (!kind) throw InvalidArgument("unknown family '" + family + "'");
      spec.kind = *kind;
      if (!parts_text.empty()) {
        std::stringstream ss(parts_text);
        for (std::string tok; std::getline(ss, tok, ',');) spec.parts.push_back(std::stoul(tok));
      }
      if (!recipe_file.empty()) {
        std::ifstream in(recipe_file);
        if (!in) throw ParseError("cannot open recipe '" + recipe_file + "'");
        if (spec.kind == FamilyKind::cograph) spec.cograph_recipe = io::read_cograph_recipe(in);
        else if (spec.kind == FamilyKind::cactus) spec.cactus_recipe = io::read_cactus_recipe(in);
        else throw InvalidArgument("--recipe applies only to cograph and cactus");
      }
      const Graph g = generate(spec);
      const std::vector<std::string> comments{"family " + family};
      if (gen_out.empty() || gen_out == "-") {
        io::write_edge_list(out, g, std::nullopt, comments);
      } else {
        io::write_edge_list_file(gen_out, g, std::nullopt, comments);
        out << "n=" << g.order() << " m=" << g.size() << '\n';
      }
      return kOk;
    }

    if (product->parsed()) {
      if (product_factors.size() < 2) throw InvalidArgument("product needs at least two factors");
      const auto p = strong_product_multi(detail::load_factors(product_factors));
      const std::vector<std::string> comments{"strong product, row-major ids, first factor slowest"};
      if (product_out.empty() || product_out == "-") {
        io::write_edge_list(out, p.graph, p.index, comments);
      } else {
        io::write_edge_list_file(product_out, p.graph, p.index, comments);
        out << "n=" << p.graph.order() << " m=" << p.graph.size() << '\n';
        out << "index: row-major over factor orders";
        for (auto o : p.index.orders()) out << ' ' << o;
        out << " (first factor slowest)\n";
      }
      return kOk;
    }

    if (mu->parsed()) {
      const auto file = io::read_edge_list_file(mu_graph);
      const DistanceMatrix dist(file.graph);
      require_connected(file.graph, "mu");
      const SetKind kind = *kind_from_name(mu_kind);
      io::CertificateFile c;
      c.graph = file.graph;
      c.graph_file = mu_graph;
      c.index = file.index;
      c.solver = mu_budget.metadata();
      c.solver["method"] = mu_method;
      std::size_t value = 0;
      std::uint64_t nodes = 0;
      double seconds = 0;
      bool exact = true;
      if (mu_method == "heuristic") {
        if (kind != SetKind::mutual) throw InvalidArgument("the heuristic searches mutual-visibility sets only");
        HeuristicOptions h;
        h.seed = mu_budget.seed;
        h.max_iterations = mu_iterations;
        if (mu_target) h.target = mu_target;
        h.time_budget = mu_budget.solve().time_budget;
        const auto r = heuristic_mv_set(file.graph, dist, h);
        value = r.certificate.size;
        nodes = r.iterations;
        seconds = r.elapsed.count();
        exact = false;
        c.kind = kind;
        c.set = r.certificate.set.to_vector();
        c.verified = r.certificate.verified;
      } else {
        const auto r = mu_method == "brute" ? brute_force(file.graph, dist, kind, mu_budget.oracle_limit)
                                            : solve_exact(file.graph, dist, kind, mu_budget.solve());
        value = r.value;
        nodes = r.nodes_explored;
        seconds = r.elapsed.count();
        exact = r.exact;
        c.kind = kind;
        c.set = r.certificate.set.to_vector();
        c.verified = r.certificate.verified;
      }
      c.size = c.set.size();
      c.exact = exact;
      c.solver["nodes"] = nodes;
      c.solver["elapsed_seconds"] = seconds;
      detail::emit_certificate(c, mu_out, out);
      std::ostream& summary = detail::to_stdout(mu_out) ? err : out;
      summary << "value=" << value << " nodes=" << nodes << " time=" << seconds;
      if (!exact) summary << " exact=false";
      summary << '\n';
      if (!exact && mu_method != "heuristic") {
        err << "budget exceeded: value is a verified lower bound only\n";
        return kBudget;
      }
      return kOk;
    }

    if (check->parsed()) {
      const auto cert = io::read_certificate_file(check_cert);
      Graph g;
      if (!check_graph.empty()) g = io::read_edge_list_file(check_graph).graph;
      else if (cert.graph) g = *cert.graph;
      else if (cert.graph_file) g = io::read_edge_list_file(*cert.graph_file).graph;
      else throw ParseError("certificate names no graph and --graph was not given");
      for (Vertex v : cert.set)
        if (v >= g.order()) throw ParseError("certificate vertex " + std::to_string(v) + " out of range");
      if (cert.size != cert.set.size()) {
        out << "FAILED: size field " << cert.size << " does not match " << cert.set.size() << " listed vertices\n";
        return kFailed;
      }
      const DistanceMatrix dist(g);
      require_connected(g, "check");
      const VertexSet s = VertexSet::from_range(g.order(), cert.set);
      if (satisfies(g, dist, s, cert.kind)) {
        out << "verified kind=" << kind_name(cert.kind) << " size=" << cert.size << '\n';
        return kOk;
      }
      out << "FAILED: set is not a " << kind_name(cert.kind) << " set\n";
      return kFailed;
    }

    if (construct->parsed()) {
      const SolveOptions solve = construct_budget.solve();
      ConstructedSet built;
      auto single_graph = [&] {
        if (construct_graph.empty()) throw InvalidArgument("--graph is required for " + theorem);
        return io::read_edge_list_file(construct_graph).graph;
      };
      auto factors_or_throw = [&](std::size_t min_count) {
        if (construct_factors.size() < min_count)
          throw InvalidArgument(theorem + " needs at least " + std::to_string(min_count) + " --factors");
        return detail::load_factors(construct_factors);
      };
      if (theorem == "thm4.1" || theorem == "cor4.2") {
        const auto factors = factors_or_throw(theorem == "thm4.1" ? 2 : 1);
        if (theorem == "thm4.1" && factors.size() != 2) throw InvalidArgument("thm4.1 takes exactly two factors");
        std::vector<VertexSet> sets;
        if (!sets_text.empty()) sets = detail::parse_sets(sets_text, factors);
        else
          for (const auto& f : factors) sets.push_back(canonical_feasible_set(f, solve));
        built = multiway_tmv_set(factors, sets);
      } else if (theorem == "thm4.4") {
        built = grid_extremal_set(dims).extremal;
      } else if (theorem == "cor4.5") {
        built = universal_product_tmv(factors_or_throw(1));
      } else if (theorem == "thm4.6") {
        const auto factors = factors_or_throw(2);
        if (factors.size() != 2) throw InvalidArgument("thm4.6 takes exactly two factors");
        std::vector<VertexSet> sets;
        if (!sets_text.empty()) sets = detail::parse_sets(sets_text, factors);
        else
          for (const auto& f : factors) sets.push_back(solve_exact(f, SetKind::mutual, solve).certificate.set);
        built = product_mv_set(factors[0], sets[0], factors[1], sets[1]);
      } else if (theorem == "thm5.1") {
        built = prism_layer_set(single_graph());
      } else if (theorem == "thm5.2") {
        const Graph g = single_graph();
        const VertexSet s = sets_text.empty() ? canonical_feasible_set(g, solve)
                                              : detail::parse_sets(sets_text, {g}).front();
        built = prism_tmv_set(g, s);
      } else if (theorem == "thm5.4") {
        built = block_prism_set(single_graph());
      } else if (theorem == "blockmu") {
        const Graph g = single_graph();
        built.certificate = block_graph_mu_set(g);
        built.formula_value = built.certificate.size;
        built.graph = g;
      }
      auto c = io::make_certificate_file(built.graph, built.certificate, built.index);
      c.formula_value = built.formula_value;
      c.solver = construct_budget.metadata();
      c.solver["construction"] = theorem;
      detail::emit_certificate(c, construct_out, out);
      (detail::to_stdout(construct_out) ? err : out) << "size=" << built.certificate.size << " formula=" << built.formula_value
          << " kind=" << kind_name(built.certificate.kind) << " verified=" << (built.certificate.verified ? "true" : "false")
          << '\n';
      return built.certificate.verified ? kOk : kFailed;
    }

    if (table->parsed()) {
      if (tmin) params.min = tmin;
      if (tmax) params.max = tmax;
      if (tcount) params.count = tcount;
      if (tmax_n) params.max_n = tmax_n;
      params.seed = table_budget.seed;
      params.solve = table_budget.solve();
      params.heuristic.time_budget = params.solve.time_budget;
      if (table_iterations) params.heuristic.max_iterations = table_iterations;
      if (!table_family.empty()) {
        const auto f = family_from_name(table_family);
        if (!f) throw InvalidArgument("unknown family '" + table_family + "'");
        params.family = f;
      }
      const Table t = run_experiment(experiment, params);
      print_table(out, t, table_format == "csv");
      return kOk;
    }

    if (exp->parsed()) {
      const auto file = io::read_edge_list_file(export_graph);
      std::optional<VertexSet> highlight;
      if (!export_cert.empty()) {
        const auto cert = io::read_certificate_file(export_cert);
        VertexSet s(file.graph.order());
        for (Vertex v : cert.set) {
          if (v >= file.graph.order()) throw ParseError("certificate vertex out of range for this graph");
          s.insert(v);
        }
        highlight = s;
      }
      if (export_out.empty() || export_out == "-") {
        io::write_dot(out, file.graph, file.index, highlight);
      } else {
        std::ofstream f(export_out);
        if (!f) throw ParseError("cannot write '" + export_out + "'");
        io::write_dot(f, file.graph, file.index, highlight);
      }
      return kOk;
    }
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mvis::cli
