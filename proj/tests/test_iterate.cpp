#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pmdsg/iterate.hpp"
#include "pmdsg/oracle.hpp"

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

Graph two_blocks() {
  std::vector<Graph> parts;
  parts.push_back(Graph::clique(5));
  parts.push_back(Graph::complete_bipartite(3, 9));
  return Graph::disjoint_union(parts);
}

}  // namespace

TEST_CASE("one exact pass is exact greedy peeling") {
  std::mt19937 rng(61001);
  for (int it = 0; it < 15; ++it) {
    Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 7), 0.5, it % 3 == 0);
    for (double p : {0.5, 1.0, 2.0}) {
      IterState st = greedy_pp(g, p, 1, InnerMode::exact());
      PeelResult one = greedy_p(g, p);
      CHECK(st.best.order == one.order);
      CHECK(st.best.best_start == one.best_start);
      CHECK(st.best.best_density.value == doctest::Approx(one.best_density.value));
      CHECK(st.best_iteration == 1);
      CHECK(st.iterations == 1);
    }
  }
}

TEST_CASE("loads absorb exactly T whole-graph power sums") {
  std::mt19937 rng(61002);
  for (int it = 0; it < 10; ++it) {
    Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 6), 0.5, it % 2 == 0);
    for (double p : {1.0, 2.0}) {
      for (int T : {1, 3, 7}) {
        IterState st = greedy_pp(g, p, T, InnerMode::exact());
        double total = std::accumulate(st.loads.begin(), st.loads.end(), 0.0);
        double fp = *f_p(g, VertexSet::full(g.n()), p);
        CHECK(total == doctest::Approx(T * fp).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("trajectory is the running best and the record books agree") {
  std::mt19937 rng(61003);
  for (int it = 0; it < 10; ++it) {
    Graph g = random_graph(rng, 6 + static_cast<int>(rng() % 6), 0.5, false);
    int T = 8;
    IterState st = greedy_pp(g, 2.0, T, InnerMode::exact());
    REQUIRE(static_cast<int>(st.trajectory.size()) == T);
    REQUIRE(static_cast<int>(st.per_iteration.size()) == T);
    REQUIRE(static_cast<int>(st.cumulative_seconds.size()) == T);
    for (int t = 1; t < T; ++t) {
      CHECK(st.trajectory[t] >= st.trajectory[t - 1] - 1e-12);
      CHECK(st.cumulative_seconds[t] >= st.cumulative_seconds[t - 1]);
    }
    CHECK(st.trajectory.back() == doctest::Approx(st.best.best_density.value));
    REQUIRE(st.best_iteration >= 1);
    REQUIRE(st.best_iteration <= T);
    CHECK(st.per_iteration[st.best_iteration - 1] ==
          doctest::Approx(st.best.best_density.value));
    double run_max = -kInf;
    for (int t = 0; t < T; ++t) {
      run_max = std::max(run_max, st.per_iteration[t]);
      CHECK(st.trajectory[t] == doctest::Approx(run_max));
    }
  }
}

TEST_CASE("iterated peeling converges to the planted optimum") {
  Graph g = two_blocks();
  double star = brute_force_opt(g, 1.0).best_density.value;
  CHECK(star == doctest::Approx(4.5));  // the bipartite block beats the clique
  IterState st = greedy_pp(g, 1.0, 16, InnerMode::exact());
  CHECK(st.best.best_density.value >= 0.999 * star);

  // p = 2 favors the same block; the iterated run must land on the optimum too
  double star2 = brute_force_opt(g, 2.0).best_density.value;
  IterState st2 = greedy_pp(g, 2.0, 16, InnerMode::exact());
  CHECK(st2.best.best_density.value >= 0.999 * star2);
}

TEST_CASE("lazy inner passes keep the per-pass guarantee") {
  std::mt19937 rng(61004);
  for (int it = 0; it < 10; ++it) {
    Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 5), 0.55, false);
    for (double p : {1.0, 2.0}) {
      double star = brute_force_opt(g, p).best_density.value;
      double eps = 0.5;
      IterState st = greedy_pp(g, p, 4, InnerMode::lazy_eps(eps));
      double factor = std::pow((1.0 - eps) / (p + 1.0), 1.0 / p);
      CHECK(st.best.best_density.value >= factor * star - 1e-9);
    }
  }
}

TEST_CASE("one simple pass per exponent reproduces the single-shot scan") {
  std::mt19937 rng(61005);
  for (int it = 0; it < 12; ++it) {
    Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 7), 0.5, it % 3 == 0);
    std::vector<double> ps{1.0, -1.0, -kInf};
    SimplePPResult r = simple_pp(g, 1, ps);
    REQUIRE(r.per_p.size() == ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      PeelResult direct = simple_greedy_p(g, ps[i]);
      const PeelResult& got = r.per_p[i].best;
      CHECK(got.order == direct.order);
      CHECK(got.best_start == direct.best_start);
      REQUIRE(got.best_density.defined == direct.best_density.defined);
      if (direct.best_density.defined)
        CHECK(got.best_density.value == doctest::Approx(direct.best_density.value));
    }
  }
}

TEST_CASE("simple iterated peeling closes in on the average-degree optimum") {
  Graph g = two_blocks();
  SimplePPResult r = simple_pp(g, 100, {1.0});
  CHECK(r.per_p[0].best.best_density.value >= 0.99 * 4.5);
}

TEST_CASE("the load trail is shared across exponents") {
  std::mt19937 rng(61006);
  Graph g = random_graph(rng, 9, 0.5, false);
  SimplePPResult multi = simple_pp(g, 5, {1.0, -1.0, 0.5});
  SimplePPResult single = simple_pp(g, 5, {1.0});
  CHECK(multi.per_p[0].loads == single.per_p[0].loads);
  CHECK(multi.per_p[1].loads == multi.per_p[0].loads);
  CHECK(multi.per_p[2].loads == multi.per_p[0].loads);
  CHECK(multi.per_p[0].best.best_density.value ==
        doctest::Approx(single.per_p[0].best.best_density.value));
}

TEST_CASE("iterated peeling input validation") {
  Graph k3 = Graph::clique(3);
  CHECK_THROWS_AS(greedy_pp(k3, 1.0, 0, InnerMode::exact()), std::invalid_argument);
  CHECK_THROWS_AS(greedy_pp(k3, -1.0, 2, InnerMode::exact()), std::invalid_argument);
  CHECK_THROWS_AS(simple_pp(k3, 0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(simple_pp(k3, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(simple_pp(k3, 2, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(simple_pp(k3, 2, {0.0}), std::invalid_argument);
}
