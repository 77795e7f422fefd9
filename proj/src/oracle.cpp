#include "pmdsg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pmdsg {

namespace {

inline double dpow(double d, double p) {
  if (d <= 0.0) return 0.0;
  return std::pow(d, p);
}

// Shared preference rule: better score first (direction-aware, 1e-9 relative
// ties), then fewer vertices, then the lexicographically smaller mask.
struct BestMask {
  bool have = false;
  double score = 0.0;
  int size = 0;
  unsigned mask = 0;

  void offer(double s, int sz, unsigned m, bool maximize) {
    if (!have) {
      have = true;
      score = s;
      size = sz;
      mask = m;
      return;
    }
    if (nearly_equal(s, score)) {
      if (sz < size || (sz == size && m < mask)) {
        score = s;
        size = sz;
        mask = m;
      }
      return;
    }
    if (maximize ? s > score : s < score) {
      score = s;
      size = sz;
      mask = m;
    }
  }
};

}  // namespace

OracleResult brute_force_opt(const Graph& g, double p, int limit) {
  check_p(p);
  int n = g.n();
  if (n > limit) throw std::invalid_argument("brute_force_opt: graph exceeds the subset-enumeration limit");
  OracleResult res;
  res.best_set = VertexSet(n);
  if (n == 0) return res;

  bool inf_p = std::isinf(p);
  bool maximize = inf_p || p > 0.0;  // max-min for -inf, min-rho for finite p < 0
  std::vector<unsigned> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v] |= 1u << u;

  std::vector<double> pw;
  if (!inf_p && !g.weighted()) {
    pw.resize(n);
    for (int k = 0; k < n; ++k) pw[k] = dpow(k, p);
  }

  BestMask best;
  unsigned full = (n == 32 ? 0xffffffffu : (1u << n) - 1);
  std::vector<double> wdeg(n);
  for (unsigned mask = 1; mask <= full; ++mask) {
    ++res.sets_examined;
    int size = __builtin_popcount(mask);
    if (inf_p) {
      // M_{-inf} = min induced degree, M_{inf} = max induced degree.
      double extreme = p < 0 ? std::numeric_limits<double>::infinity() : 0.0;
      for (unsigned bits = mask; bits; bits &= bits - 1) {
        int v = __builtin_ctz(bits);
        double d;
        if (g.weighted()) {
          d = 0.0;
          auto nbrs = g.neighbors(v);
          auto ws = g.edge_weights(v);
          for (std::size_t i = 0; i < nbrs.size(); ++i)
            if (mask >> nbrs[i] & 1) d += ws[i];
        } else {
          d = __builtin_popcount(adj[v] & mask);
        }
        extreme = p < 0 ? std::min(extreme, d) : std::max(extreme, d);
      }
      best.offer(extreme, size, mask, true);
      continue;
    }

    double f = 0.0;
    bool feasible = true;
    if (!g.weighted()) {
      for (unsigned bits = mask; bits; bits &= bits - 1) {
        int v = __builtin_ctz(bits);
        int d = __builtin_popcount(adj[v] & mask);
        if (d == 0 && p < 0) {
          feasible = false;
          break;
        }
        f += pw[d];
      }
    } else {
      for (unsigned bits = mask; bits; bits &= bits - 1) {
        int v = __builtin_ctz(bits);
        if ((adj[v] & mask) == 0 && p < 0) {
          feasible = false;
          break;
        }
        double d = 0.0;
        auto nbrs = g.neighbors(v);
        auto ws = g.edge_weights(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
          if (mask >> nbrs[i] & 1) d += ws[i];
        f += dpow(d, p);
      }
    }
    if (!feasible) continue;
    best.offer(f / size, size, mask, maximize);
  }

  if (best.have) {
    for (int v = 0; v < n; ++v)
      if (best.mask >> v & 1) res.best_set.add(v);
    res.best_density = inf_p ? Density::of(best.score)
                             : Density::of(std::pow(best.score, 1.0 / p));
  }
  return res;
}

bool int_flat_check(int n, double c, double p, int s) {
  check_finite_p(p);
  bool pos = p > 0.0;
  if (pos && p >= 1.0) throw std::invalid_argument("int_flat_check: needs p in (0,1) or p < 0");
  if (n < 1 || n > 8) throw std::invalid_argument("int_flat_check: n out of range");
  if (s < 0 || s > 16) throw std::invalid_argument("int_flat_check: s out of range");
  if (c < 0.0) throw std::invalid_argument("int_flat_check: c must be >= 0");

  int hi = (s + n - 1) / n;          // ceil(s/n)
  int lo = std::max(hi - 1, 0);
  if (!pos && c == 0.0 && s < n)
    // Balanced vectors would contain a zero entry, making (c + x)^p undefined.
    throw std::invalid_argument("int_flat_check: balanced vector has zero entries with c = 0, p < 0");

  auto balanced = [&](const std::vector<int>& x) {
    for (int v : x)
      if (v != hi && v != lo) return false;
    return true;
  };

  std::vector<int> x(n, 0);
  double best = pos ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, bool>> rows;  // (value, is_balanced), feasible only

  // Odometer over all compositions of s into n non-negative parts.
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n - 1) {
      x[i] = rem;
      bool feasible = true;
      double val = 0.0;
      for (int v : x) {
        double base = c + v;
        if (base <= 0.0 && !pos) {
          feasible = false;
          break;
        }
        val += dpow(base, p);
      }
      if (feasible) {
        rows.emplace_back(val, balanced(x));
        best = pos ? std::max(best, val) : std::min(best, val);
      }
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      x[i] = v;
      rec(i + 1, rem - v);
    }
  };
  rec(0, s);

  if (!std::isfinite(best)) return false;
  double band = 1e-12 * std::max(1.0, std::fabs(best));
  for (auto& [val, bal] : rows) {
    bool opt = std::fabs(val - best) <= band;
    if (opt != bal) return false;
  }
  return true;
}

std::vector<double> brute_force_lmo(const Graph& g, double p, const std::vector<double>& w) {
  check_finite_p(p);
  if (p < 1.0) throw std::invalid_argument("brute_force_lmo: requires p >= 1");
  int n = g.n();
  if (n > 8) throw std::invalid_argument("brute_force_lmo: graph too large for factorial search");
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("brute_force_lmo: weight vector must cover every vertex");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> best_z;
  double best_dot = std::numeric_limits<double>::infinity();
  std::vector<double> deg(n), z(n);
  std::vector<char> placed(n);
  do {
    std::fill(deg.begin(), deg.end(), 0.0);
    std::fill(placed.begin(), placed.end(), 0);
    double dot = 0.0;
    for (int v : perm) {
      auto nbrs = g.neighbors(v);
      auto ws = g.edge_weights(v);
      double dv = 0.0, gain = 0.0;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        int u = nbrs[i];
        if (!placed[u]) continue;
        dv += ws[i];
        gain += dpow(deg[u] + ws[i], p) - dpow(deg[u], p);
      }
      z[v] = dpow(dv, p) + gain;
      dot += z[v] * w[v];
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (placed[nbrs[i]]) deg[nbrs[i]] += ws[i];
      deg[v] = dv;
      placed[v] = 1;
    }
    if (dot < best_dot) {
      best_dot = dot;
      best_z = z;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_z;
}

}  // namespace pmdsg
