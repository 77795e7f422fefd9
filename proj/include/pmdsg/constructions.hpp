#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "pmdsg/graph.hpp"

namespace pmdsg {

// Exact-3-cover instance: ground set {0, ..., 3n-1} and m three-element sets.
struct X3CInstance {
  int n = 0;                                // ground size is 3n
  std::vector<std::array<int, 3>> sets;

  int ground_size() const { return 3 * n; }
  void validate() const;                    // throws on malformed sets
};

// File format: first line "n m", then m lines of 3 distinct element indices.
X3CInstance load_x3c(std::istream& in);
X3CInstance load_x3c_file(const std::string& path);

enum class GadgetRegime { WeightedPos, WeightedNeg, UnweightedPos, UnweightedNeg };

const char* regime_name(GadgetRegime r);

// Decision-gadget graph for the reduction from exact 3-cover. Element
// vertices occupy ids 0..3n-1 (internally d-regular: a weighted clique with
// per-edge weight d/(3n-1), or the circulant(3n, {1,2,3n/2})); set vertices
// follow, joined by unit edges to their three elements. A planted exact cover
// S gives rho_p(S cup A) = rho_star; without one, every set misses it (in the
// regime's direction).
struct GadgetSpec {
  Graph graph;
  double rho_star = 0.0;       // (3^p + 3(d+1)^p) / 4
  double d = 0.0;              // internal degree of element vertices
  GadgetRegime regime{};
  bool decide_geq = true;      // true: TRUE iff opt rho >= rho_star (p > 0)
  int element_count = 0;       // |A| = 3n
  int set_count = 0;           // |L| = m
};

// Valid (p, weighted) combinations: weighted with p in (0,1) -> d = 1.23p +
// 4.77; weighted with p in (-3,0) -> d = p/2 + 5; unweighted with p in
// (0,1/4) or (-1/8,0) -> d = 5 and n must be even.
GadgetSpec x3c_gadget(const X3CInstance& inst, double p, bool weighted);

// Brute-force decision: optimize rho_p over the gadget and compare against
// rho_star with a one-sided 1e-9 tolerance toward TRUE.
bool x3c_decide(const X3CInstance& inst, double p, bool weighted, int limit = 22);

// Edge-maximal d-degenerate graph on n vertices realizing the degree
// sequence d, d+1, ..., 2d-1, then 2d-1 repeated C(d+1,2) times, then 2d for
// the rest. Built by seeding K_{d+1} and attaching each new vertex to the d
// vertices with the largest remaining degree deficit (ties by smaller id);
// the result is validated against the target sequence and degeneracy and a
// failure throws rather than returning a wrong graph. Requires
// n >= d + C(d+1,2) + 1.
Graph bickle_graph(int n, int d);

// Disjoint union of bickle_graph(n_H, d), r cliques K_{d+3}, and
// K_{d+1,D}: the family on which both 1/2-approximations are tight. p is
// validated against the family's regime (p < 1, p != 0) but does not affect
// the graph.
Graph tight_family(int d, int n_H, int r, int D, double p);

// Hardness-analysis inequality scan: F1 = 3^p + 3(d+1)^p - 4 d^p and
// F2 = 3^p + 4(d+2)^p - 5(d+1)^p with d = d(p) per regime. Positive-p
// regimes expect F1 > 0 and F2 < 0; negative-p regimes the reverse.
struct ScanRow {
  double p = 0.0;
  double d = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  bool sign_ok = false;
};
double regime_d(GadgetRegime regime, double p);
std::vector<ScanRow> scan_inequalities(GadgetRegime regime, const std::vector<double>& p_grid);

// Density curve g(alpha) = (3^p alpha + 3(d+alpha)^p) / (alpha + 3) sampled
// on a grid in [0,10]; g(1) = rho_star and g(0) = d^p. opt_at_one reports
// whether alpha = 1 strictly beat every other sample (max for p > 0, min for
// p < 0). On integer-spaced grids this restates the F1/F2 sign facts; the
// real-valued extremum sits near, not exactly at, alpha = 1, so dense
// fractional grids can legitimately report false.
struct CurveRow {
  double alpha = 0.0;
  double g = 0.0;
};
struct CurveResult {
  std::vector<CurveRow> rows;
  bool opt_at_one = false;   // alpha = 1 strictly beats every other sample
};
CurveResult gadget_density_curve(double p, double d, const std::vector<double>& grid);

}  // namespace pmdsg
