#include "pmdsg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pmdsg/density.hpp"
#include "pmdsg/oracle.hpp"
#include "pmdsg/peeling.hpp"

namespace pmdsg {

namespace {

inline double dpow(double d, double p) {
  if (d <= 0.0) return 0.0;
  return std::pow(d, p);
}

}  // namespace

void X3CInstance::validate() const {
  if (n < 1) throw std::invalid_argument("x3c: ground size must be positive");
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& s = sets[k];
    for (int e : s)
      if (e < 0 || e >= 3 * n)
        throw std::invalid_argument("x3c: set " + std::to_string(k) + " references element " +
                                    std::to_string(e) + " outside the ground set");
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
      throw std::invalid_argument("x3c: set " + std::to_string(k) + " has repeated elements");
  }
}

X3CInstance load_x3c(std::istream& in) {
  X3CInstance inst;
  long long m = 0;
  if (!(in >> inst.n >> m)) throw std::runtime_error("x3c parse error: expected header \"n m\"");
  if (m < 0) throw std::runtime_error("x3c parse error: negative set count");
  inst.sets.resize(m);
  for (long long k = 0; k < m; ++k)
    if (!(in >> inst.sets[k][0] >> inst.sets[k][1] >> inst.sets[k][2]))
      throw std::runtime_error("x3c parse error: set " + std::to_string(k) +
                               " is missing elements");
  inst.validate();
  return inst;
}

X3CInstance load_x3c_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_x3c(in);
}

const char* regime_name(GadgetRegime r) {
  switch (r) {
    case GadgetRegime::WeightedPos: return "weighted-positive";
    case GadgetRegime::WeightedNeg: return "weighted-negative";
    case GadgetRegime::UnweightedPos: return "unweighted-positive";
    case GadgetRegime::UnweightedNeg: return "unweighted-negative";
  }
  return "?";
}

double regime_d(GadgetRegime regime, double p) {
  check_finite_p(p);
  switch (regime) {
    case GadgetRegime::WeightedPos:
      if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("regime_d: weighted-positive needs p in (0,1)");
      return 1.23 * p + 4.77;
    case GadgetRegime::WeightedNeg:
      if (!(p > -3.0 && p < 0.0))
        throw std::invalid_argument("regime_d: weighted-negative needs p in (-3,0)");
      return 0.5 * p + 5.0;
    case GadgetRegime::UnweightedPos:
      if (!(p > 0.0 && p < 0.25))
        throw std::invalid_argument("regime_d: unweighted-positive needs p in (0,1/4)");
      return 5.0;
    case GadgetRegime::UnweightedNeg:
      if (!(p > -0.125 && p < 0.0))
        throw std::invalid_argument("regime_d: unweighted-negative needs p in (-1/8,0)");
      return 5.0;
  }
  throw std::invalid_argument("regime_d: unknown regime");
}

GadgetSpec x3c_gadget(const X3CInstance& inst, double p, bool weighted) {
  inst.validate();
  check_finite_p(p);

  GadgetRegime regime;
  if (weighted && p > 0.0)
    regime = GadgetRegime::WeightedPos;
  else if (weighted)
    regime = GadgetRegime::WeightedNeg;
  else if (p > 0.0)
    regime = GadgetRegime::UnweightedPos;
  else
    regime = GadgetRegime::UnweightedNeg;
  double d = regime_d(regime, p);  // also validates the p range

  int a = 3 * inst.n;  // element vertices, ids 0..a-1
  std::vector<Graph::RawEdge> edges;
  if (weighted) {
    double w = d / (a - 1);  // d-regular weighted clique on the elements
    for (int i = 0; i < a; ++i)
      for (int j = i + 1; j < a; ++j) edges.push_back({i, j, w});
  } else {
    if (inst.n % 2 != 0)
      throw std::invalid_argument("x3c_gadget: unweighted regimes need an even ground multiplier");
    // circulant(3n, {1, 2, 3n/2}) is 5-regular for even n
    for (int off : {1, 2, a / 2})
      for (int i = 0; i < a; ++i) edges.push_back({i, (i + off) % a, 1.0});
  }
  for (std::size_t k = 0; k < inst.sets.size(); ++k)
    for (int e : inst.sets[k]) edges.push_back({a + static_cast<long long>(k), e, 1.0});

  GadgetSpec spec;
  spec.graph = Graph::from_raw_edges(edges, weighted);
  spec.rho_star = (dpow(3.0, p) + 3.0 * dpow(d + 1.0, p)) / 4.0;
  spec.d = d;
  spec.regime = regime;
  spec.decide_geq = p > 0.0;
  spec.element_count = a;
  spec.set_count = static_cast<int>(inst.sets.size());
  return spec;
}

bool x3c_decide(const X3CInstance& inst, double p, bool weighted, int limit) {
  GadgetSpec spec = x3c_gadget(inst, p, weighted);
  OracleResult opt = brute_force_opt(spec.graph, p, limit);
  auto f = f_p(spec.graph, opt.best_set, p);
  if (!f) throw std::logic_error("x3c_decide: oracle returned an infeasible set");
  double rho = *f / opt.best_set.size();
  return spec.decide_geq ? rho >= spec.rho_star - kDensityRelTol
                         : rho <= spec.rho_star + kDensityRelTol;
}

Graph bickle_graph(int n, int d) {
  if (d < 1) throw std::invalid_argument("bickle_graph: d must be >= 1");
  int c = d * (d + 1) / 2;
  if (n < d + c + 1)
    throw std::invalid_argument("bickle_graph: need n >= d + (d+1 choose 2) + 1");

  // Target degree sequence, descending by id:
  //   2d     for ids 0 .. n-d-c-1
  //   2d-1   for the next c+1 ids
  //   2d-2, 2d-3, ..., d  one each for the last d-1 ids
  std::vector<int> target(n);
  for (int v = 0; v < n; ++v) {
    if (v < n - d - c)
      target[v] = 2 * d;
    else if (v < n - d + 1)
      target[v] = 2 * d - 1;
    else
      target[v] = 2 * d - 1 - (v - (n - d));
  }

  std::vector<Graph::RawEdge> edges;
  std::vector<int> deg(n, 0);
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      edges.push_back({i, j, 1.0});
      ++deg[i];
      ++deg[j];
    }
  std::vector<int> pick;
  for (int v = d + 1; v < n; ++v) {
    pick.resize(v);
    std::iota(pick.begin(), pick.end(), 0);
    std::sort(pick.begin(), pick.end(), [&](int a, int b) {
      int da = target[a] - deg[a], db = target[b] - deg[b];
      if (da != db) return da > db;
      return a < b;
    });
    for (int i = 0; i < d; ++i) {
      edges.push_back({v, pick[i], 1.0});
      ++deg[pick[i]];
      ++deg[v];
    }
  }

  Graph g = Graph::from_raw_edges(edges, false);
  if (g.n() != n) throw std::logic_error("bickle_graph validation failed: vertex count");
  std::vector<int> got(n), want = target;
  for (int v = 0; v < n; ++v) got[v] = g.degree(v);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) throw std::logic_error("bickle_graph validation failed: degree multiset mismatch");
  int degen = degeneracy_maxcore(g).degeneracy;
  if (degen != d)
    throw std::logic_error("bickle_graph validation failed: degeneracy " + std::to_string(degen) +
                           ", expected " + std::to_string(d));
  return g;
}

Graph tight_family(int d, int n_H, int r, int D, double p) {
  check_p(p);
  if (p >= 1.0) throw std::invalid_argument("tight_family: needs p < 1");
  if (r < 1) throw std::invalid_argument("tight_family: need at least one clique");
  if (D < 1) throw std::invalid_argument("tight_family: need D >= 1");
  std::vector<Graph> parts;
  parts.push_back(bickle_graph(n_H, d));
  for (int i = 0; i < r; ++i) parts.push_back(Graph::clique(d + 3));
  parts.push_back(Graph::complete_bipartite(d + 1, D));
  return Graph::disjoint_union(parts);
}

std::vector<ScanRow> scan_inequalities(GadgetRegime regime, const std::vector<double>& p_grid) {
  std::vector<ScanRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    ScanRow row;
    row.p = p;
    row.d = regime_d(regime, p);
    row.f1 = dpow(3.0, p) + 3.0 * dpow(row.d + 1.0, p) - 4.0 * dpow(row.d, p);
    row.f2 = dpow(3.0, p) + 4.0 * dpow(row.d + 2.0, p) - 5.0 * dpow(row.d + 1.0, p);
    row.sign_ok = p > 0.0 ? (row.f1 > 0.0 && row.f2 < 0.0) : (row.f1 < 0.0 && row.f2 > 0.0);
    rows.push_back(row);
  }
  return rows;
}

CurveResult gadget_density_curve(double p, double d, const std::vector<double>& grid) {
  check_finite_p(p);
  if (d <= 0.0) throw std::invalid_argument("gadget_density_curve: d must be positive");
  CurveResult res;
  std::vector<double> alphas = grid;
  if (std::none_of(alphas.begin(), alphas.end(),
                   [](double a) { return std::fabs(a - 1.0) < 1e-12; }))
    alphas.push_back(1.0);
  std::sort(alphas.begin(), alphas.end());
  double at_one = 0.0;
  for (double a : alphas) {
    if (a < 0.0) throw std::invalid_argument("gadget_density_curve: alpha must be >= 0");
    double g = (dpow(3.0, p) * a + 3.0 * dpow(d + a, p)) / (a + 3.0);
    res.rows.push_back({a, g});
    if (std::fabs(a - 1.0) < 1e-12) at_one = g;
  }
  res.opt_at_one = true;
  for (const auto& row : res.rows) {
    if (std::fabs(row.alpha - 1.0) < 1e-12) continue;
    bool beaten = p > 0.0 ? at_one > row.g : at_one < row.g;
    if (!beaten) res.opt_at_one = false;
  }
  return res;
}

}  // namespace pmdsg
