#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pmdsg/graph.hpp"

namespace pmdsg {

// Density comparisons everywhere use this relative tolerance; ties are broken
// by smaller set size, then by earlier iteration, then by smaller suffix
// start index. This makes every argmax in the library deterministic.
inline constexpr double kDensityRelTol = 1e-9;

bool nearly_equal(double a, double b, double rel_tol = kDensityRelTol);

// Exponent of the generalized degree mean. Any nonzero real plus the two
// infinities is valid; 0 and NaN are rejected at every API boundary.
void check_p(double p);
// Restricts further: p must be finite (f_p and marginals).
void check_finite_p(double p);

// A p-mean density value. `defined` is false only when p < 0 (finite) and the
// evaluated set contains a vertex of induced degree 0; p = -inf yields the
// minimum degree (possibly 0) instead of the sentinel.
struct Density {
  double value = 0.0;
  bool defined = true;

  static Density undefined() { return {0.0, false}; }
  static Density of(double v) { return {v, true}; }
};

// Sum of induced-degree powers over s: f_p(S) = sum_{v in S} d_S(v)^p.
// Induced degrees are weighted when the graph is weighted. Returns nullopt
// when p < 0 and some vertex of s is isolated inside s.
std::optional<double> f_p(const Graph& g, const VertexSet& s, double p);

// Generalized mean density M_p(S) = (f_p(S)/|S|)^{1/p}; min induced degree at
// p = -inf, max at p = +inf. Throws on an empty set.
Density m_p(const Graph& g, const VertexSet& s, double p);

// Marginal f_p(v | S - v) = f_p(S) - f_p(S - v), computed by the neighbor-
// local rewrite d_S(v)^p + sum_{u in N(v) cap S} [d_S(u)^p - (d_S(u)-w_uv)^p].
// Requires v in s and p > 0 finite.
double marginal_f_p(const Graph& g, const VertexSet& s, int v, double p);

// Densities of all n suffixes S_i = {order[i], ..., order[n-1]} computed by
// one reverse incremental insertion sweep. `order` must be a permutation of
// the vertices. For finite p < 0, suffixes containing an induced-isolated
// vertex come back undefined.
std::vector<Density> suffix_densities(const Graph& g, std::span<const int> order, double p);

// One contender in a density argmax. Iteration disambiguates candidates drawn
// from different peel passes; single-pass callers leave it 0.
struct Candidate {
  double value = 0.0;
  long long size = 0;
  long long iteration = 0;
  long long start = 0;
};

// Strictly-better-than under the shared tolerance and tie-break rule.
bool better_candidate(const Candidate& a, const Candidate& b);

struct SuffixPick {
  int start = -1;      // index into the order; -1 if every suffix was undefined
  Density density;
};

// Argmax over defined suffixes using the shared comparison rule.
SuffixPick best_suffix(std::span<const Density> per_suffix);

}  // namespace pmdsg
