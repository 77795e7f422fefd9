#pragma once

#include <functional>
#include <vector>

#include "pmdsg/peeling.hpp"

namespace pmdsg {

// Conditional-gradient solver for
//     minimize sum_v b_v^2  subject to  b in B_{f_p}
// where B_{f_p} = {x >= 0 : x(S) >= f_p(S) for all S, x(V) = f_p(V)} is the
// base contrapolymatroid of the supermodular f_p (p >= 1 throughout).

struct FWState {
  std::vector<double> b;                // fractional point after K iterations
  int iterations = 0;
  std::vector<double> objective_trace;  // sum b^2 at x_0 .. x_K (K+1 entries)
  PeelResult rounded;
};

// Feasible start: x_v = d_G(v)^p (whole-graph degree powers).
std::vector<double> fw_initial_point(const Graph& g, double p);

// Linear minimization oracle over B_{f_p}: order vertices by decreasing w
// (ties by smaller id) and assign each the increase of f_p when appended to
// its prefix. Extreme point; sums to f_p(V).
std::vector<double> lmo(const Graph& g, double p, const std::vector<double>& w);

// K Frank-Wolfe steps with alpha_k = 2/(k+2). The gradient of sum b^2 is 2b,
// whose argsort equals b's, so the LMO runs on w = b directly. The observer,
// when given, sees x_k after every iteration (k = 1..K).
using FWObserver = std::function<void(int k, const std::vector<double>& b)>;
FWState frank_wolfe(const Graph& g, double p, int K, const FWObserver& observer = {});

// Round a fractional point: sort vertices by increasing b (ties by smaller
// id) and return the best-density suffix.
PeelResult round_fractional(const Graph& g, double p, const std::vector<double>& b);

}  // namespace pmdsg
