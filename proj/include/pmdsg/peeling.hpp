#pragma once

#include <span>
#include <vector>

#include "pmdsg/density.hpp"
#include "pmdsg/graph.hpp"

namespace pmdsg {

struct PeelStats {
  long long pops = 0;
  long long refresh_events = 0;            // lazy engine only
  std::vector<int> refreshes_per_vertex;   // lazy engine only
  double wall_seconds = 0.0;
};

struct PeelResult {
  std::vector<int> order;            // peel order v_1..v_n
  std::vector<Density> per_suffix;   // density of the suffix starting at i
  int best_start = -1;               // index into order
  VertexSet best_set;
  Density best_density;
  PeelStats stats;
};

// Recorded while the lazy engine runs with auditing on: how far the heap keys
// strayed from the exact marginals, measured at every pop over every
// surviving vertex.
struct LazyAudit {
  double max_over_ratio = 0.0;   // max A[v] / f_p(v|S-v), should be <= 1+eps
  double max_under_rel = 0.0;    // max (f_p(v|S-v) - A[v]) / |f_p(v|S-v)|
};

// Exact greedy peeling for p > 0: repeatedly remove the vertex minimizing
// f_p(v | S - v), then return the best-density suffix. The approximation
// guarantee (1/(p+1))^{1/p} holds for p >= 1; for p in (0,1) the run is a
// heuristic.
PeelResult greedy_p(const Graph& g, double p);

// Lazy variant: keys use stale degrees D' refreshed only when
// D'[u] > (1 + eps/p) D[u], giving a ((1-eps)/(p+1))^{1/p} guarantee for
// p >= 1. eps = 0 degenerates to greedy_p exactly (same code path, same
// tie-breaking, identical orders). Pass an audit sink to have every pop
// checked against the exact marginal (slow, test-only).
PeelResult lazy_greedy_p(const Graph& g, double p, double eps, LazyAudit* audit = nullptr);

// One pass of the shared peel engine with per-vertex load offsets added to
// the keys. Used by the iterated algorithms; loads may be null. When
// charge_out is non-null it receives, per vertex, the (approximate) marginal
// the key carried at pop time; the never-popped last vertex gets 0.
PeelResult peel_with_loads(const Graph& g, double p, double eps,
                           const std::vector<double>* loads,
                           std::vector<double>* charge_out, LazyAudit* audit = nullptr);

// Classic min-degree peeling order, independent of p. Unweighted graphs use
// an integer bucket queue in O(m + n); within a degree bucket, ties pop the
// most recently demoted vertex first (smallest id at the initial degrees).
// Weighted graphs peel by weighted degree via the indexed heap, which breaks
// ties by smallest id. Both orders are deterministic.
std::vector<int> simple_greedy_order(const Graph& g);

// Min-(load + degree) peeling pass shared by simple_greedy_order (zero loads)
// and the iterated simple algorithm. charge_out[v] receives d_S(v) at v's pop
// time (weighted degree on weighted graphs); the last vertex gets 0.
std::vector<int> load_degree_order(const Graph& g, const std::vector<double>& loads,
                                   std::vector<double>* charge_out);

// Suffix-density scan over simple_greedy_order. Valid for p in [-inf, 1],
// p != 0; a 1/2-approximation to the p-mean densest subgraph there.
PeelResult simple_greedy_p(const Graph& g, double p);

struct CoreResult {
  int degeneracy = 0;
  VertexSet core;
};

// Degeneracy = max over peel suffixes of the min induced degree, and the
// suffix attaining it. Computed on unweighted degree counts regardless of
// edge weights.
CoreResult degeneracy_maxcore(const Graph& g);

}  // namespace pmdsg
