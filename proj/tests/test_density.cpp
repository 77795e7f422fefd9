#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "pmdsg/density.hpp"
#include "pmdsg/graph.hpp"

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

VertexSet random_subset(std::mt19937& rng, const Graph& g, int min_size) {
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (coin(rng)) s.add(v);
    if (static_cast<int>(s.size()) >= min_size) return s;
  }
}

// Direct from-definition evaluation used as the reference.
double induced_degree(const Graph& g, const VertexSet& s, int v) {
  double d = 0.0;
  auto nbrs = g.neighbors(v);
  auto ws = g.edge_weights(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    if (s.contains(nbrs[i])) d += ws[i];
  return d;
}

}  // namespace

TEST_CASE("degree power sums on small named graphs") {
  Graph k3 = Graph::clique(3);
  CHECK(*f_p(k3, VertexSet::full(3), 2.0) == doctest::Approx(12.0));

  Graph star = Graph::complete_bipartite(1, 3);
  CHECK(*f_p(star, VertexSet::full(4), 1.0) == doctest::Approx(6.0));

  std::istringstream in("0 1\n1 2\n");
  Graph p3 = Graph::load_edge_list(in, false);
  CHECK(*f_p(p3, VertexSet::full(3), -1.0) == doctest::Approx(2.5));
}

TEST_CASE("generalized means: finite p and both infinities") {
  Graph star = Graph::complete_bipartite(1, 3);
  VertexSet all = VertexSet::full(4);
  CHECK(m_p(star, all, 1.0).value == doctest::Approx(1.5));
  CHECK(m_p(star, all, -kInf).value == doctest::Approx(1.0));
  CHECK(m_p(star, all, kInf).value == doctest::Approx(3.0));

  // p = 2 on K_3: (12/3)^(1/2) = 2 = induced degree of a triangle vertex.
  Graph k3 = Graph::clique(3);
  CHECK(m_p(k3, VertexSet::full(3), 2.0).value == doctest::Approx(2.0));
}

TEST_CASE("zero-degree members: 0^p = 0 for p > 0, undefined mean for finite p < 0") {
  Graph k4p3 = Graph::load_edge_list_file("tests/data/k4p3.edges", false);
  VertexSet s(k4p3.n());
  s.add(0);
  s.add(4);  // two vertices from different components: both isolated inside s
  CHECK(*f_p(k4p3, s, 2.0) == doctest::Approx(0.0));
  CHECK(m_p(k4p3, s, 2.0).value == doctest::Approx(0.0));

  CHECK(!f_p(k4p3, s, -1.0).has_value());
  CHECK(!m_p(k4p3, s, -1.0).defined);
  // min-degree is still well-defined at 0
  Density lo = m_p(k4p3, s, -kInf);
  CHECK(lo.defined);
  CHECK(lo.value == doctest::Approx(0.0));
}

TEST_CASE("p = 0 and NaN are rejected") {
  Graph k3 = Graph::clique(3);
  CHECK_THROWS_AS(f_p(k3, VertexSet::full(3), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(m_p(k3, VertexSet::full(3), std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(check_finite_p(kInf), std::invalid_argument);
  CHECK_NOTHROW(check_p(-kInf));
}

TEST_CASE("removal marginals on K_3 and the star") {
  // marginal_f_p(g, s, v, p) = f_p(s) - f_p(s - v), with v a member of s.
  Graph k3 = Graph::clique(3);
  CHECK(marginal_f_p(k3, VertexSet::full(3), 2, 2.0) == doctest::Approx(10.0));  // 12 - 2

  Graph star = Graph::complete_bipartite(1, 3);
  VertexSet hub_leaf(4);
  hub_leaf.add(0);
  hub_leaf.add(1);
  CHECK(marginal_f_p(star, hub_leaf, 1, 1.0) == doctest::Approx(2.0));  // 2 - 0

  CHECK_THROWS_AS(marginal_f_p(k3, hub_leaf, 2, 2.0), std::invalid_argument);  // v not in s
  VertexSet all = VertexSet::full(3);
  CHECK_THROWS_AS(marginal_f_p(k3, all, 2, -1.0), std::invalid_argument);  // needs p > 0
}

TEST_CASE("marginal equals the two-evaluation difference on random graphs") {
  std::mt19937 rng(7101);
  std::uniform_real_distribution<double> pdist(0.1, 3.0);
  int cases = 0;
  while (cases < 1000) {
    Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.5, cases % 3 == 0);
    VertexSet s = random_subset(rng, g, 1);
    auto mem = s.members();
    int v = mem[rng() % mem.size()];
    double p = pdist(rng);
    VertexSet without = s;
    without.remove(v);
    double direct = *f_p(g, s, p) - *f_p(g, without, p);
    double got = marginal_f_p(g, s, v, p);
    CHECK(got == doctest::Approx(direct).epsilon(1e-9));
    ++cases;
  }
}

TEST_CASE("means are monotone in p on random vertex sets") {
  std::mt19937 rng(913);
  const double grid[] = {-kInf, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, kInf};
  for (int it = 0; it < 200; ++it) {
    Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 5), 0.6, it % 4 == 0);
    VertexSet s = random_subset(rng, g, 2);
    double prev = -kInf;
    for (double p : grid) {
      Density d = m_p(g, s, p);
      if (!d.defined) continue;  // finite p < 0 with an isolated member
      CHECK(d.value >= prev - 1e-9 * std::max(1.0, std::fabs(prev)));
      prev = d.value;
    }
  }
}

TEST_CASE("suffix densities along an order: named examples") {
  std::istringstream in("0 1\n1 2\n");
  Graph p3 = Graph::load_edge_list(in, false);
  std::vector<int> order{0, 2, 1};
  auto sd = suffix_densities(p3, order, 1.0);
  REQUIRE(sd.size() == 3);
  CHECK(sd[0].value == doctest::Approx(4.0 / 3.0));
  CHECK(sd[1].value == doctest::Approx(1.0));
  CHECK(sd[2].value == doctest::Approx(0.0));

  Graph k4 = Graph::clique(4);
  std::vector<int> ord{0, 1, 2, 3};
  auto sk = suffix_densities(k4, ord, 2.0);
  for (int i = 0; i < 4; ++i) CHECK(sk[i].value == doctest::Approx(3.0 - i));
}

TEST_CASE("suffix sweep matches direct per-suffix evaluation") {
  std::mt19937 rng(7250);
  const double ps[] = {2.0, 0.5, -1.0, -kInf, kInf};
  for (int it = 0; it < 60; ++it) {
    Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 7), 0.45, it % 2 == 0);
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (double p : ps) {
      auto sweep = suffix_densities(g, order, p);
      for (int i = 0; i < g.n(); ++i) {
        VertexSet s(g.n());
        for (int j = i; j < g.n(); ++j) s.add(order[j]);
        Density direct = m_p(g, s, p);
        REQUIRE(sweep[i].defined == direct.defined);
        if (direct.defined)
          CHECK(sweep[i].value == doctest::Approx(direct.value).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("suffix sweep validates the order is a permutation") {
  Graph k3 = Graph::clique(3);
  std::vector<int> dup{0, 0, 2};
  CHECK_THROWS_AS(suffix_densities(k3, dup, 1.0), std::invalid_argument);
  std::vector<int> small{0, 1};
  CHECK_THROWS_AS(suffix_densities(k3, small, 1.0), std::invalid_argument);
}

TEST_CASE("candidate preference: value, then size, then iteration, then start") {
  Candidate a{3.0, 4, 1, 2};
  Candidate b{2.9, 3, 1, 0};
  CHECK(better_candidate(a, b));
  // near-equal values fall through to the smaller set
  Candidate c{3.0 + 1e-13, 3, 2, 5};
  CHECK(better_candidate(c, a));
  // then to the earlier iteration
  Candidate d{3.0, 4, 2, 2};
  CHECK(better_candidate(a, d));
  // then to the smaller start index
  Candidate e{3.0, 4, 1, 1};
  CHECK(better_candidate(e, a));
  CHECK(!better_candidate(a, e));
}

TEST_CASE("best suffix skips undefined entries") {
  std::vector<Density> per = {Density::of(1.0), Density::undefined(), Density::of(2.0),
                              Density::of(2.0)};
  SuffixPick pick = best_suffix(per);
  CHECK(pick.start == 3);  // ties prefer the smaller suffix
  CHECK(pick.density.value == doctest::Approx(2.0));

  std::vector<Density> none = {Density::undefined(), Density::undefined()};
  CHECK(best_suffix(none).start == -1);
}
