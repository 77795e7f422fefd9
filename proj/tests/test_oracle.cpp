#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pmdsg/frank_wolfe.hpp"
#include "pmdsg/oracle.hpp"
#include "pmdsg/peeling.hpp"

using namespace pmdsg;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Graph random_graph(std::mt19937& rng, int n, double prob, bool weighted) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> wdist(0.25, 3.0);
  while (true) {
    std::vector<Graph::RawEdge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < prob) edges.push_back({u, v, weighted ? wdist(rng) : 1.0});
    if (!edges.empty()) return Graph::from_raw_edges(edges, weighted);
  }
}

}  // namespace

TEST_CASE("exhaustive optimum: average degree of K_{2,4} peaks on the full set") {
  Graph g = Graph::complete_bipartite(2, 4);
  OracleResult r = brute_force_opt(g, 1.0);
  CHECK(r.best_density.value == doctest::Approx(8.0 / 3.0));
  CHECK(r.best_set.size() == 6);
  CHECK(r.sets_examined == (1ull << 6) - 1);
}

TEST_CASE("exhaustive optimum: harmonic mean on the length-two path") {
  std::vector<Graph::RawEdge> e{{0, 1, 1.0}, {1, 2, 1.0}};
  Graph p3 = Graph::from_raw_edges(e, false);
  OracleResult r = brute_force_opt(p3, -1.0);
  // full set: (f_{-1}/3)^{-1} = 3/2.5 = 1.2 beats any single edge's 1.0
  CHECK(r.best_density.value == doctest::Approx(1.2));
  CHECK(r.best_set.size() == 3);
}

TEST_CASE("exhaustive optimum on a weighted triangle") {
  Graph g = Graph::load_edge_list_file("tests/data/weighted_triangle.edges", true);
  OracleResult r = brute_force_opt(g, 1.0);
  CHECK(r.best_density.value == doctest::Approx(8.0 / 3.0));
  CHECK(r.best_set.size() == 3);
}

TEST_CASE("extreme exponents reduce to max degree and max-min-degree subsets") {
  Graph g = Graph::load_edge_list_file("tests/data/k4p3.edges", false);
  OracleResult hi = brute_force_opt(g, kInf);
  CHECK(hi.best_density.value == doctest::Approx(3.0));
  CHECK(hi.best_set.size() == 4);  // the clique is the smallest witness
  for (int v = 0; v < 4; ++v) CHECK(hi.best_set.contains(v));

  OracleResult lo = brute_force_opt(g, -kInf);
  CHECK(lo.best_density.value == doctest::Approx(3.0));
  CHECK(lo.best_set.size() == 4);
  CHECK(lo.sets_examined == (1ull << 7) - 1);
}

TEST_CASE("oracle dominates every peeling heuristic") {
  std::mt19937 rng(40402);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 5), 0.5, it % 3 == 0);
    for (double p : {0.5, 1.0, 2.0}) {
      double star = brute_force_opt(g, p).best_density.value;
      double tol = 1e-9 * std::max(1.0, star);
      CHECK(greedy_p(g, p).best_density.value <= star + tol);
      CHECK(lazy_greedy_p(g, p, 0.3).best_density.value <= star + tol);
      if (p <= 1.0) CHECK(simple_greedy_p(g, p).best_density.value <= star + tol);
    }
    for (double p : {-1.0, -0.5, -kInf}) {
      OracleResult r = brute_force_opt(g, p);
      REQUIRE(r.best_density.defined);
      double tol = 1e-9 * std::max(1.0, r.best_density.value);
      PeelResult pr = simple_greedy_p(g, p);
      if (pr.best_density.defined)
        CHECK(pr.best_density.value <= r.best_density.value + tol);
    }
  }
}

TEST_CASE("oracle refuses graphs beyond the enumeration limit") {
  Graph g = Graph::clique(8);
  CHECK_THROWS_AS(brute_force_opt(g, 1.0, 7), std::invalid_argument);
  CHECK_NOTHROW(brute_force_opt(g, 1.0, 8));
}

TEST_CASE("integer flat-profile audit accepts balanced-only optima") {
  CHECK(int_flat_check(3, 5.0, 0.5, 4));
  CHECK(int_flat_check(4, 5.385, -1.0, 4));
  CHECK(int_flat_check(5, 0.0, 0.5, 12));
  CHECK(int_flat_check(3, 2.0, -0.5, 7));
  CHECK(int_flat_check(4, 1.0, -2.0, 9));
}

TEST_CASE("integer flat-profile audit input validation") {
  CHECK_THROWS_AS(int_flat_check(2, 1.0, 2.0, 2), std::invalid_argument);    // p >= 1
  CHECK_THROWS_AS(int_flat_check(4, 0.0, -1.0, 3), std::invalid_argument);   // zero entry, c = 0
  CHECK_THROWS_AS(int_flat_check(9, 1.0, 0.5, 4), std::invalid_argument);    // n cap
  CHECK_THROWS_AS(int_flat_check(3, 1.0, 0.5, 17), std::invalid_argument);   // s cap
  CHECK_THROWS_AS(int_flat_check(3, -1.0, 0.5, 4), std::invalid_argument);   // c < 0
}

TEST_CASE("factorial LMO oracle: validation and base-sum invariant") {
  Graph big = Graph::clique(9);
  std::vector<double> w9(9, 1.0);
  CHECK_THROWS_AS(brute_force_lmo(big, 1.0, w9), std::invalid_argument);

  Graph g = Graph::load_edge_list_file("tests/data/k4p3.edges", false);
  std::vector<double> wshort(3, 1.0);
  CHECK_THROWS_AS(brute_force_lmo(g, 1.0, wshort), std::invalid_argument);
  std::vector<double> w(7, 0.5);
  CHECK_THROWS_AS(brute_force_lmo(g, 0.5, w), std::invalid_argument);

  std::vector<double> z = brute_force_lmo(g, 2.0, w);
  double total = std::accumulate(z.begin(), z.end(), 0.0);
  CHECK(total == doctest::Approx(*f_p(g, VertexSet::full(7), 2.0)));
}

TEST_CASE("fast LMO attains the factorial minimum dot product") {
  std::mt19937 rng(8118);
  std::uniform_real_distribution<double> wdist(-2.0, 2.0);
  for (int it = 0; it < 25; ++it) {
    Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.55, it % 4 == 0);
    std::vector<double> w(g.n());
    for (double& x : w) x = wdist(rng);
    for (double p : {1.0, 1.5, 2.0}) {
      std::vector<double> fast = lmo(g, p, w);
      std::vector<double> brute = brute_force_lmo(g, p, w);
      double dot_fast = 0.0, dot_brute = 0.0;
      for (int v = 0; v < g.n(); ++v) {
        dot_fast += fast[v] * w[v];
        dot_brute += brute[v] * w[v];
      }
      CHECK(dot_fast == doctest::Approx(dot_brute).epsilon(1e-9));
    }
  }
}
