#pragma once

#include <vector>

#include "pmdsg/peeling.hpp"

namespace pmdsg {

// How the per-iteration peel maintains its keys.
struct InnerMode {
  bool lazy = false;
  double eps = 0.0;

  static InnerMode exact() { return {false, 0.0}; }
  static InnerMode lazy_eps(double eps) { return {true, eps}; }
};

struct IterState {
  std::vector<double> loads;            // final per-vertex loads
  int iterations = 0;
  PeelResult best;                      // best suffix over all T*n candidates
  int best_iteration = 0;               // 1-based pass that produced best
  std::vector<double> per_iteration;    // best density within each single pass
  std::vector<double> trajectory;       // best-so-far density after each pass
  std::vector<double> cumulative_seconds;
};

// Iterated peeling with per-vertex loads for p >= 1 (p > 0 accepted, the
// guarantee is for p >= 1): each pass peels by load + marginal, loads absorb
// the marginal charged at pop time, and the answer is the best suffix across
// every pass. T = 1 with an exact inner pass is exactly greedy_p. With a lazy
// inner pass the load update uses the approximate marginal the heap acted on.
IterState greedy_pp(const Graph& g, double p, int T, InnerMode inner);

struct SimplePPResult {
  std::vector<double> ps;
  std::vector<IterState> per_p;   // aligned with ps; loads identical across entries
};

// Iterated min-(load + degree) peeling. One run of the load engine serves
// every p in ps (all in [-inf, 1], nonzero): each pass's ordering is scanned
// once per p and the best suffix per p over all passes is returned. T = 1
// reproduces simple_greedy_p exactly.
SimplePPResult simple_pp(const Graph& g, int T, const std::vector<double>& ps);

}  // namespace pmdsg
