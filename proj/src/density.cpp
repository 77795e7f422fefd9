#include "pmdsg/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace pmdsg {

bool nearly_equal(double a, double b, double rel_tol) {
  if (a == b) return true;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

void check_p(double p) {
  if (std::isnan(p) || p == 0.0)
    throw std::invalid_argument("exponent p must be a nonzero real or +-inf");
}

void check_finite_p(double p) {
  check_p(p);
  if (std::isinf(p)) throw std::invalid_argument("exponent p must be finite here");
}

namespace {

// d^p with the convention 0^p = 0 for p > 0. Callers handle d = 0 with p < 0
// before reaching here. Negative d never occurs except as float cancellation
// residue in weighted-degree arithmetic, so clamp.
inline double dpow(double d, double p) {
  if (d <= 0.0) return 0.0;
  return std::pow(d, p);
}

// Induced (weighted) degrees of the members of s, aligned with member order.
std::vector<double> induced_degrees(const Graph& g, const VertexSet& s,
                                    const std::vector<int>& mem) {
  std::vector<double> deg(mem.size(), 0.0);
  for (std::size_t i = 0; i < mem.size(); ++i) {
    int v = mem[i];
    auto nbrs = g.neighbors(v);
    auto ws = g.edge_weights(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j)
      if (s.contains(nbrs[j])) deg[i] += ws[j];
  }
  return deg;
}

}  // namespace

std::optional<double> f_p(const Graph& g, const VertexSet& s, double p) {
  check_finite_p(p);
  auto mem = s.members();
  auto deg = induced_degrees(g, s, mem);
  double sum = 0.0;
  for (double d : deg) {
    if (d <= 0.0) {
      if (p < 0.0) return std::nullopt;
      continue;  // 0^p = 0 for p > 0
    }
    sum += std::pow(d, p);
  }
  return sum;
}

Density m_p(const Graph& g, const VertexSet& s, double p) {
  check_p(p);
  if (s.size() == 0) throw std::invalid_argument("m_p: set must be nonempty");
  auto mem = s.members();
  auto deg = induced_degrees(g, s, mem);
  if (std::isinf(p)) {
    double extreme = p > 0 ? *std::max_element(deg.begin(), deg.end())
                           : *std::min_element(deg.begin(), deg.end());
    return Density::of(extreme);
  }
  double sum = 0.0;
  for (double d : deg) {
    if (d <= 0.0) {
      if (p < 0.0) return Density::undefined();
      continue;
    }
    sum += std::pow(d, p);
  }
  return Density::of(std::pow(sum / s.size(), 1.0 / p));
}

double marginal_f_p(const Graph& g, const VertexSet& s, int v, double p) {
  check_finite_p(p);
  if (p < 0.0) throw std::invalid_argument("marginal_f_p: requires p > 0");
  if (v < 0 || v >= s.universe() || !s.contains(v))
    throw std::invalid_argument("marginal_f_p: v must belong to s");
  // d_S(v)^p + sum over in-set neighbors of the drop in their own term.
  auto nbrs = g.neighbors(v);
  auto ws = g.edge_weights(v);
  double dv = 0.0;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    if (s.contains(nbrs[i])) dv += ws[i];
  double total = dpow(dv, p);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    int u = nbrs[i];
    if (!s.contains(u)) continue;
    double du = 0.0;
    auto un = g.neighbors(u);
    auto uw = g.edge_weights(u);
    for (std::size_t j = 0; j < un.size(); ++j)
      if (s.contains(un[j])) du += uw[j];
    total += dpow(du, p) - dpow(du - ws[i], p);
  }
  return total;
}

std::vector<Density> suffix_densities(const Graph& g, std::span<const int> order, double p) {
  check_p(p);
  int n = g.n();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("suffix_densities: order must be a permutation of V");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("suffix_densities: order must be a permutation of V");
    seen[v] = 1;
  }

  std::vector<Density> out(n);
  std::vector<double> deg(n, 0.0);
  std::vector<char> in(n, 0);

  if (std::isinf(p)) {
    // Degree multiset maintained explicitly: insertions only ever raise the
    // degrees of earlier-inserted vertices, but the new vertex may enter
    // below the current extreme.
    std::multiset<double> degrees;
    for (int i = n - 1; i >= 0; --i) {
      int v = order[i];
      auto nbrs = g.neighbors(v);
      auto ws = g.edge_weights(v);
      double dv = 0.0;
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        int u = nbrs[j];
        if (!in[u]) continue;
        degrees.erase(degrees.find(deg[u]));
        deg[u] += ws[j];
        degrees.insert(deg[u]);
        dv += ws[j];
      }
      deg[v] = dv;
      in[v] = 1;
      degrees.insert(dv);
      out[i] = Density::of(p > 0 ? *degrees.rbegin() : *degrees.begin());
    }
    return out;
  }

  // Finite p: maintain f = sum d^p and the count of zero-degree members.
  double f = 0.0;
  int zero_count = 0;
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    auto nbrs = g.neighbors(v);
    auto ws = g.edge_weights(v);
    double dv = 0.0;
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      int u = nbrs[j];
      if (!in[u]) continue;
      if (deg[u] <= 0.0)
        --zero_count;
      else
        f -= std::pow(deg[u], p);
      deg[u] += ws[j];
      f += std::pow(deg[u], p);
      dv += ws[j];
    }
    deg[v] = dv;
    in[v] = 1;
    if (dv <= 0.0)
      ++zero_count;
    else
      f += std::pow(dv, p);
    int size = n - i;
    if (p < 0.0 && zero_count > 0) {
      out[i] = Density::undefined();
    } else {
      // Zero-degree vertices contribute 0 to f for p > 0. The clamp guards
      // against cancellation residue when f is structurally 0.
      out[i] = Density::of(std::pow(std::max(f, 0.0) / size, 1.0 / p));
    }
  }
  return out;
}

bool better_candidate(const Candidate& a, const Candidate& b) {
  if (!nearly_equal(a.value, b.value)) return a.value > b.value;
  if (a.size != b.size) return a.size < b.size;
  if (a.iteration != b.iteration) return a.iteration < b.iteration;
  return a.start < b.start;
}

SuffixPick best_suffix(std::span<const Density> per_suffix) {
  int n = static_cast<int>(per_suffix.size());
  SuffixPick pick;
  Candidate best{};
  bool have = false;
  for (int i = 0; i < n; ++i) {
    if (!per_suffix[i].defined) continue;
    Candidate c{per_suffix[i].value, n - i, 0, i};
    if (!have || better_candidate(c, best)) {
      best = c;
      have = true;
      pick.start = i;
      pick.density = per_suffix[i];
    }
  }
  return pick;
}

}  // namespace pmdsg
