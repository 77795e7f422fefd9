#include "pmdsg/iterate.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

namespace pmdsg {

IterState greedy_pp(const Graph& g, double p, int T, InnerMode inner) {
  if (T < 1) throw std::invalid_argument("greedy_pp: need at least one iteration");
  IterState st;
  st.loads.assign(g.n(), 0.0);
  st.iterations = T;
  auto t0 = std::chrono::steady_clock::now();

  Candidate best{};
  bool have_best = false;
  double eps = inner.lazy ? inner.eps : 0.0;
  for (int t = 1; t <= T; ++t) {
    std::vector<double> charge;
    PeelResult r = peel_with_loads(g, p, eps, &st.loads, &charge);
    for (int v = 0; v < g.n(); ++v) st.loads[v] += charge[v];

    double pass_best = r.best_start >= 0 ? r.best_density.value : 0.0;
    st.per_iteration.push_back(pass_best);
    if (r.best_start >= 0) {
      Candidate c{r.best_density.value, static_cast<int>(r.best_set.size()), t, r.best_start};
      if (!have_best || better_candidate(c, best)) {
        best = c;
        st.best = std::move(r);
        st.best_iteration = t;
        have_best = true;
      }
    }
    st.trajectory.push_back(have_best ? best.value : 0.0);
    st.cumulative_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return st;
}

SimplePPResult simple_pp(const Graph& g, int T, const std::vector<double>& ps) {
  if (T < 1) throw std::invalid_argument("simple_pp: need at least one iteration");
  if (ps.empty()) throw std::invalid_argument("simple_pp: need at least one exponent");
  for (double p : ps) {
    check_p(p);
    if (p > 1.0) throw std::invalid_argument("simple_pp: exponents must lie in [-inf, 1]");
  }

  int n = g.n();
  SimplePPResult out;
  out.ps = ps;
  out.per_p.assign(ps.size(), IterState{});
  for (auto& st : out.per_p) {
    st.iterations = T;
    st.loads.assign(n, 0.0);
  }

  std::vector<double> loads(n, 0.0);
  std::vector<Candidate> best(ps.size());
  std::vector<char> have_best(ps.size(), 0);
  auto t0 = std::chrono::steady_clock::now();

  for (int t = 1; t <= T; ++t) {
    std::vector<double> charge;
    std::vector<int> order = load_degree_order(g, loads, &charge);
    for (int v = 0; v < n; ++v) loads[v] += charge[v];

    // One ordering serves every exponent; only the suffix scan depends on p.
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (std::size_t j = 0; j < ps.size(); ++j) {
      IterState& st = out.per_p[j];
      std::vector<Density> per_suffix = suffix_densities(g, order, ps[j]);
      SuffixPick pick = best_suffix(per_suffix);
      st.per_iteration.push_back(pick.start >= 0 ? pick.density.value : 0.0);
      if (pick.start >= 0) {
        Candidate c{pick.density.value, n - pick.start, t, pick.start};
        if (!have_best[j] || better_candidate(c, best[j])) {
          best[j] = c;
          have_best[j] = 1;
          st.best_iteration = t;
          st.best.order = order;
          st.best.per_suffix = std::move(per_suffix);
          st.best.best_start = pick.start;
          st.best.best_density = pick.density;
          st.best.best_set = VertexSet(n);
          for (int i = pick.start; i < n; ++i) st.best.best_set.add(order[i]);
          st.best.stats.pops = n;
        }
      }
      st.trajectory.push_back(have_best[j] ? best[j].value : 0.0);
      st.cumulative_seconds.push_back(elapsed);
    }
  }
  for (auto& st : out.per_p) st.loads = loads;
  return out;
}

}  // namespace pmdsg
