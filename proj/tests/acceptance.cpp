// Acceptance run: one PASS/FAIL line per criterion. Exit status is 1 if any
// criterion fails other than one marked as a known discrepancy.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "mvis/mvis.hpp"

using namespace mvis;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  bool known = false;  // red for a documented reason; does not fail the run
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << "s";
  return o.str();
}

// Solves and records a timing failure when the limit is exceeded.
SolveResult timed_solve(const Graph& g, SetKind kind, double limit_s, Outcome& o, const std::string& what) {
  const auto t = Clock::now();
  auto r = solve_exact(g, kind);
  const double took = seconds_since(t);
  if (took > limit_s) {
    o.pass = false;
    o.detail += what + " took " + fmt(took) + "; ";
  }
  return r;
}

std::vector<Graph> random_pairs_side(SplitMix64& rng, std::size_t max_n) {
  return {random_connected(rng.between(2, max_n), 0.2 + 0.5 * rng.unit(), rng.next()),
          random_connected(rng.between(2, max_n), 0.2 + 0.5 * rng.unit(), rng.next())};
}

Outcome cycle_prisms() {
  Outcome o;
  std::string got;
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto prism = strong_product(cycle_graph(n), path_graph(2));
    const auto r = timed_solve(prism.graph, SetKind::mutual, 60, o, "n=" + std::to_string(n));
    const std::size_t want = std::vector<std::size_t>{6, 6, 6, 7, 7, 8}[n - 3];
    got += std::to_string(r.value) + (n < 8 ? "," : "");
    if (r.value != want || !r.certificate.verified) o.pass = false;
  }
  o.detail += "values " + got + " (expected 6,6,6,7,7,8)";
  return o;
}

Outcome grids_2d() {
  Outcome o;
  std::size_t ok = 0;
  double slowest = 0;
  for (std::size_t m = 3; m <= 5; ++m)
    for (std::size_t n = 3; n <= 5; ++n) {
      const auto t = Clock::now();
      const auto r = timed_solve(strong_product(path_graph(m), path_graph(n)).graph, SetKind::mutual, 300, o,
                                 std::to_string(m) + "x" + std::to_string(n));
      slowest = std::max(slowest, seconds_since(t));
      if (r.value == 2 * m + 2 * n - 4) ++ok;
      else o.detail += std::to_string(m) + "x" + std::to_string(n) + " gave " + std::to_string(r.value) + "; ";
    }
  o.pass = o.pass && ok == 9;
  o.detail += std::to_string(ok) + "/9 equal 2m+2n-4, slowest " + fmt(slowest);
  return o;
}

Outcome grid_pinching() {
  Outcome o;
  std::size_t ok = 0;
  for (std::size_t m = 3; m <= 5; ++m)
    for (std::size_t n = 3; n <= 5; ++n) {
      const auto c = grid_extremal_set({m, n});
      const auto bound = hull_cover_upper_bound(c.extremal.graph, c.cover.parts());
      if (c.extremal.certificate.verified && c.extremal.certificate.size == bound) ++ok;
    }
  o.pass = ok == 9;
  o.detail = std::to_string(ok) + "/9 grids with |extremal set| = hull-cover bound";
  return o;
}

Outcome grid_3d() {
  const auto t = Clock::now();
  const auto c = grid_extremal_set({3, 3, 3});
  const double took = seconds_since(t);
  const std::size_t display = 2 * (9 + 9 + 9) - 4 * 9 + 8;
  const auto& cert = c.extremal.certificate;
  const bool checker = is_tmv_set(c.extremal.graph, DistanceMatrix(c.extremal.graph), cert.set);
  Outcome o;
  o.pass = cert.size == 26 && display == 26 && checker && cert.verified && took < 10;
  o.detail = "size " + std::to_string(cert.size) + ", display formula " + std::to_string(display) + ", checker " +
             (checker ? "ok" : "rejects") + ", " + fmt(took);
  return o;
}

// The expected mu_t(C3) = 2 cannot hold: C3 = K3, where every set is a total
// set, so mu_t(C3) = 3. That single mismatch is reported red but marked known;
// any other mismatch is a real failure.
Outcome cycles() {
  Outcome o;
  bool only_triangle = true;
  for (std::size_t n = 3; n <= 9; ++n) {
    const Graph c = cycle_graph(n);
    const auto mut = solve_exact(c, SetKind::total).value;
    const auto mu = solve_exact(c, SetKind::mutual).value;
    if (mut != (n <= 4 ? 2u : 0u) || mu != 3) {
      o.pass = false;
      if (!(n == 3 && mu == 3 && mut == 3 && brute_force(c, SetKind::total).value == 3)) only_triangle = false;
      o.detail += "C" + std::to_string(n) + ": mu=" + std::to_string(mu) + " mut=" + std::to_string(mut) + "; ";
    }
  }
  if (o.pass) {
    o.detail = "mu(Cn)=3 for n=3..9, mut=2 for n=3,4 and 0 for n=5..9";
  } else if (only_triangle) {
    o.known = true;
    o.detail += "known: C3 is complete so mut(C3)=3; C4 gives 2, n=5..9 give 0, mu=3 for n=3..9";
  }
  return o;
}

Outcome block_prisms() {
  Outcome o;
  std::size_t ok = 0;
  SplitMix64 rng(0x6b);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_block_graph(rng.between(2, 9), rng.next());
    const auto mu_set = block_graph_mu_set(g);
    const auto built = block_prism_set(g);
    const auto r = timed_solve(built.graph, SetKind::mutual, 120, o, "instance " + std::to_string(i));
    if (r.value == g.order() + mu_set.size && built.certificate.size == r.value && built.certificate.verified) ++ok;
  }
  o.pass = o.pass && ok == 20;
  o.detail += std::to_string(ok) + "/20 block graphs with mu(G x P2) = n + mu and construction attaining it";
  return o;
}

Outcome product_tmv_suite() {
  Outcome o;
  std::size_t ok = 0;
  SplitMix64 rng(0x41);
  for (int i = 0; i < 30; ++i) {
    const auto gh = random_pairs_side(rng, 6);
    const auto sg = brute_force(gh[0], SetKind::feasible_total).certificate.set;
    const auto sh = brute_force(gh[1], SetKind::feasible_total).certificate.set;
    const auto built = product_tmv_set(gh[0], sg, gh[1], sh);
    const std::size_t formula = sg.count() * gh[1].order() + sh.count() * gh[0].order() - sg.count() * sh.count();
    const bool feasible = is_feasible_tmv_set(built.graph, DistanceMatrix(built.graph), built.certificate.set);
    if (feasible && built.certificate.size == formula) ++ok;
  }
  o.pass = ok == 30;
  o.detail = std::to_string(ok) + "/30 pairs";
  return o;
}

Outcome product_mv_suite() {
  Outcome o;
  std::size_t ok = 0;
  SplitMix64 rng(0x46);
  for (int i = 0; i < 30; ++i) {
    const auto gh = random_pairs_side(rng, 6);
    const auto sg = solve_exact(gh[0], SetKind::mutual).certificate.set;
    const auto sh = solve_exact(gh[1], SetKind::mutual).certificate.set;
    const auto built = product_mv_set(gh[0], sg, gh[1], sh);
    if (is_mv_set(built.graph, DistanceMatrix(built.graph), built.certificate.set) &&
        built.certificate.size == sg.count() * sh.count())
      ++ok;
  }
  o.pass = ok == 30;
  o.detail = std::to_string(ok) + "/30 pairs";
  return o;
}

Outcome classifiers() {
  std::size_t cograph_ok = 0, cactus_ok = 0;
  SplitMix64 rng(0x39);
  for (int i = 0; i < 50; ++i) {
    const Graph g = build_cograph(random_cograph_recipe(rng.between(2, 10), rng.next()));
    const bool equal = solve_exact(g, SetKind::mutual).value == solve_exact(g, SetKind::total).value;
    if (classify_cograph_graph(g).flag("mu-mut-graph") == equal) ++cograph_ok;
  }
  for (int i = 0; i < 50; ++i) {
    const Graph g = build_cactus(random_cactus_recipe(12, rng.next()));
    const bool zero = solve_exact(g, SetKind::total).value == 0;
    if (classify_cactus(g).flag("mu-total-zero") == zero) ++cactus_ok;
  }
  Outcome o;
  o.pass = cograph_ok == 50 && cactus_ok == 50;
  o.detail = "cographs " + std::to_string(cograph_ok) + "/50, cacti " + std::to_string(cactus_ok) + "/50";
  return o;
}

Outcome oracle_equivalence() {
  std::size_t ok = 0;
  SplitMix64 rng(0x3a);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected(rng.between(1, 8), 0.1 + 0.7 * rng.unit(), rng.next());
    const DistanceMatrix d(g);
    const bool mv = solve_exact(g, d, SetKind::mutual).value == brute_force(g, d, SetKind::mutual).value;
    const bool tmv = solve_exact(g, d, SetKind::total).value == brute_force(g, d, SetKind::total).value;
    if (mv && tmv) ++ok;
  }
  Outcome o;
  o.pass = ok == 200;
  o.detail = std::to_string(ok) + "/200 graphs agree for mv and tmv";
  return o;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::vector<const char*> argv{"mvis"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str() + e.str();
  return rc;
}

Outcome tree_times_path() {
  const auto dir = std::filesystem::temp_directory_path() / "mvis_acceptance";
  std::filesystem::create_directories(dir);
  const auto t_file = (dir / "t.el").string(), p_file = (dir / "p5.el").string();
  const auto cert_file = (dir / "t35.json").string();
  const Graph tree = subdivided_star(3, 3);
  io::write_edge_list_file(t_file, tree);
  io::write_edge_list_file(p_file, path_graph(5));
  std::string text;
  const int rc = run_cli({"construct", "--theorem", "thm4.1", "--factors", t_file + "," + p_file, "--out", cert_file},
                         text);
  std::string check_text;
  const int check_rc = run_cli({"check", "--cert", cert_file}, check_text);
  const bool hard = rc == 0 && check_rc == 0 && text.find("size=35 ") != std::string::npos;

  const auto product = strong_product(tree, path_graph(5));
  HeuristicOptions h;
  h.seed = 0;
  h.max_iterations = 5'000'000;
  h.time_budget = std::chrono::minutes(10);
  h.target = 36;
  const auto found = heuristic_mv_set(product.graph, DistanceMatrix(product.graph), h);
  std::filesystem::remove_all(dir);

  Outcome o;
  o.pass = hard;
  o.detail = "construction " + std::string(hard ? "size 35 verified" : "FAILED: " + text) +
             "; soft: heuristic seed 0 found " + std::to_string(found.certificate.size) +
             (found.certificate.size >= 36 ? " >= 36" : " < 36") + " in " + fmt(found.elapsed.count());
  return o;
}

Outcome universal_product() {
  const auto t = Clock::now();
  const auto built = universal_product_tmv({path_graph(3), path_graph(3)});
  const auto direct = solve_exact(strong_product(path_graph(3), path_graph(3)).graph, SetKind::total).value;
  const double took = seconds_since(t);
  Outcome o;
  o.pass = built.certificate.verified && built.certificate.size == 8 && direct == 8 && took < 60;
  o.detail = "construction " + std::to_string(built.certificate.size) + ", exact mu_t " + std::to_string(direct) +
             ", " + fmt(took);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cycle prisms C_n x P2, n=3..8", cycle_prisms},
      {"2-D strong grids 3..5", grids_2d},
      {"grid pinching: extremal set = hull-cover bound", grid_pinching},
      {"3-D grid (3,3,3) extremal set", grid_3d},
      {"cycles: mu and mu_t", cycles},
      {"block-graph prisms", block_prisms},
      {"product total sets from exhaustive feasible sets", product_tmv_suite},
      {"product of mutual-visibility sets", product_mv_suite},
      {"cograph and cactus classifiers", classifiers},
      {"exact solver vs brute force", oracle_equivalence},
      {"T x P5 construction (hard) and heuristic (soft)", tree_times_path},
      {"universal-vertex product P3 x P3", universal_product},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, false, std::string("exception: ") + e.what()};
    }
    if (!o.pass && !o.known) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << " | " << o.detail
              << " [" << fmt(seconds_since(start)) << "]" << std::endl;
  }
  std::cout << "unexpected failures: " << failed << std::endl;
  return failed == 0 ? 0 : 1;
}
