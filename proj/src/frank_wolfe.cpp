#include "pmdsg/frank_wolfe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pmdsg {

namespace {

inline double dpow(double d, double p) {
  if (d <= 0.0) return 0.0;
  return std::pow(d, p);
}

void require_p(double p) {
  check_finite_p(p);
  if (p < 1.0) throw std::invalid_argument("frank_wolfe: requires p >= 1");
}

double sum_sq(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace

std::vector<double> fw_initial_point(const Graph& g, double p) {
  require_p(p);
  std::vector<double> x(g.n());
  for (int v = 0; v < g.n(); ++v) x[v] = dpow(g.weighted_degree(v), p);
  return x;
}

std::vector<double> lmo(const Graph& g, double p, const std::vector<double>& w) {
  require_p(p);
  int n = g.n();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("lmo: weight vector must cover every vertex");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (w[a] != w[b]) return w[a] > w[b];
    return a < b;
  });

  // z_v = f_p(P + v) - f_p(P) where P is the set of vertices placed before v.
  std::vector<double> z(n, 0.0);
  std::vector<double> deg(n, 0.0);  // induced weighted degree inside P
  std::vector<char> placed(n, 0);
  for (int v : order) {
    auto nbrs = g.neighbors(v);
    auto ws = g.edge_weights(v);
    double dv = 0.0;
    double gain = 0.0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      int u = nbrs[i];
      if (!placed[u]) continue;
      double c = ws[i];
      dv += c;
      gain += dpow(deg[u] + c, p) - dpow(deg[u], p);
    }
    z[v] = dpow(dv, p) + gain;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      int u = nbrs[i];
      if (placed[u]) deg[u] += ws[i];
    }
    deg[v] = dv;
    placed[v] = 1;
  }
  return z;
}

FWState frank_wolfe(const Graph& g, double p, int K, const FWObserver& observer) {
  require_p(p);
  if (K < 0) throw std::invalid_argument("frank_wolfe: iteration count must be >= 0");

  FWState st;
  st.iterations = K;
  std::vector<double> x = fw_initial_point(g, p);
  st.objective_trace.reserve(K + 1);
  st.objective_trace.push_back(sum_sq(x));
  for (int k = 0; k < K; ++k) {
    // grad(sum b^2) = 2b sorts identically to b, so the LMO takes x itself.
    std::vector<double> y = lmo(g, p, x);
    double alpha = 2.0 / (k + 2);
    for (int v = 0; v < g.n(); ++v) x[v] = (1.0 - alpha) * x[v] + alpha * y[v];
    if (observer) observer(k + 1, x);
    st.objective_trace.push_back(sum_sq(x));
  }
  st.rounded = round_fractional(g, p, x);
  st.b = std::move(x);
  return st;
}

PeelResult round_fractional(const Graph& g, double p, const std::vector<double>& b) {
  require_p(p);
  if (static_cast<int>(b.size()) != g.n())
    throw std::invalid_argument("round_fractional: point must cover every vertex");

  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    if (b[u] != b[v]) return b[u] < b[v];
    return u < v;
  });

  PeelResult res;
  res.order = std::move(order);
  res.per_suffix = suffix_densities(g, res.order, p);
  SuffixPick pick = best_suffix(res.per_suffix);
  res.best_start = pick.start;
  res.best_density = pick.density;
  res.best_set = VertexSet(g.n());
  if (pick.start >= 0)
    for (std::size_t i = pick.start; i < res.order.size(); ++i) res.best_set.add(res.order[i]);
  return res;
}

}  // namespace pmdsg
