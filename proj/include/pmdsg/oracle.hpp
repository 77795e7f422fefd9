#pragma once

#include <vector>

#include "pmdsg/density.hpp"
#include "pmdsg/graph.hpp"

namespace pmdsg {

struct OracleResult {
  VertexSet best_set;
  Density best_density;
  unsigned long long sets_examined = 0;
};

// Exhaustive M_p optimum over all nonempty subsets. For finite p < 0, sets
// with an induced-isolated vertex are infeasible and skipped. Refuses graphs
// with n > limit.
OracleResult brute_force_opt(const Graph& g, double p, int limit = 22);

// Enumerates all non-negative integer vectors x with sum(x) = s and checks
// that sum_i (c + x_i)^p is optimized (maximized for p in (0,1), minimized
// for p < 0) exactly at the balanced vectors, i.e. those whose entries are
// all in {ceil(s/n), ceil(s/n) - 1}, and nowhere else. Requires n <= 8,
// s <= 16, and p in (0,1) or p < 0; for p < 0 with c = 0 the balanced vector
// itself must avoid zero entries.
bool int_flat_check(int n, double c, double p, int s);

// Validation oracle for the Frank-Wolfe LMO: the extreme point minimizing
// z . w over all n! ordering-induced extreme points of B_{f_p}. Requires
// n <= 8.
std::vector<double> brute_force_lmo(const Graph& g, double p, const std::vector<double>& w);

}  // namespace pmdsg
