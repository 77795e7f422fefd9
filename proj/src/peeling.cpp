#include "pmdsg/peeling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

namespace pmdsg {

namespace {

inline double dpow(double d, double p) {
  if (d <= 0.0) return 0.0;
  return std::pow(d, p);
}

// Addressable binary min-heap over (key, vertex id); ties go to the smaller
// id so every pop is deterministic.
class IndexedMinHeap {
 public:
  explicit IndexedMinHeap(int n) : key_(n, 0.0), pos_(n, -1) { heap_.reserve(n); }

  void set_initial(int v, double key) { key_[v] = key; heap_.push_back(v); }

  // Heapify after all set_initial calls.
  void build() {
    for (std::size_t i = 0; i < heap_.size(); ++i) pos_[heap_[i]] = static_cast<int>(i);
    for (int i = static_cast<int>(heap_.size()) / 2 - 1; i >= 0; --i) sift_down(i);
  }

  bool empty() const { return heap_.empty(); }
  int size() const { return static_cast<int>(heap_.size()); }
  double key(int v) const { return key_[v]; }
  bool contains(int v) const { return pos_[v] >= 0; }

  int pop_min() {
    int v = heap_[0];
    swap_nodes(0, static_cast<int>(heap_.size()) - 1);
    heap_.pop_back();
    pos_[v] = -1;
    if (!heap_.empty()) sift_down(0);
    return v;
  }

  void update(int v, double key) {
    key_[v] = key;
    int i = pos_[v];
    if (!sift_up(i)) sift_down(i);
  }

 private:
  bool less(int a, int b) const {
    if (key_[a] != key_[b]) return key_[a] < key_[b];
    return a < b;
  }
  void swap_nodes(int i, int j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }
  bool sift_up(int i) {
    bool moved = false;
    while (i > 0) {
      int parent = (i - 1) / 2;
      if (!less(heap_[i], heap_[parent])) break;
      swap_nodes(i, parent);
      i = parent;
      moved = true;
    }
    return moved;
  }
  void sift_down(int i) {
    int n = static_cast<int>(heap_.size());
    while (true) {
      int best = i, l = 2 * i + 1, r = 2 * i + 2;
      if (l < n && less(heap_[l], heap_[best])) best = l;
      if (r < n && less(heap_[r], heap_[best])) best = r;
      if (best == i) break;
      swap_nodes(i, best);
      i = best;
    }
  }

  std::vector<double> key_;
  std::vector<int> heap_;
  std::vector<int> pos_;
};

// Bucket queue over small non-negative integer keys that only decrease in
// steps of 1. Doubly-linked intrusive lists per bucket; the min pointer walks
// forward and snaps back on decrements, which keeps the whole peel O(m + n).
class BucketQueue {
 public:
  BucketQueue(std::vector<long long> keys, long long max_key)
      : key_(std::move(keys)),
        head_(max_key + 1, -1),
        next_(key_.size(), -1),
        prev_(key_.size(), -1) {
    // Insert in reverse id order so each bucket's initial head is its
    // smallest id.
    for (int v = static_cast<int>(key_.size()) - 1; v >= 0; --v) push_front(v);
  }

  int pop_min() {
    while (head_[cur_] < 0) ++cur_;
    int v = head_[cur_];
    unlink(v);
    return v;
  }

  void decrement(int v) {
    unlink(v);
    --key_[v];
    push_front(v);
    if (key_[v] < cur_) cur_ = key_[v];
  }

 private:
  void push_front(int v) {
    long long k = key_[v];
    next_[v] = head_[k];
    prev_[v] = -1;
    if (head_[k] >= 0) prev_[head_[k]] = v;
    head_[k] = v;
  }
  void unlink(int v) {
    if (prev_[v] >= 0)
      next_[prev_[v]] = next_[v];
    else
      head_[key_[v]] = next_[v];
    if (next_[v] >= 0) prev_[next_[v]] = prev_[v];
  }

  std::vector<long long> key_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> prev_;
  long long cur_ = 0;
};

// Exact marginal f_p(u | S - u) from the engine's exact degree table.
double exact_marginal(const Graph& g, const std::vector<char>& alive,
                      const std::vector<double>& D, int u, double p) {
  double total = dpow(D[u], p);
  auto nbrs = g.neighbors(u);
  auto ws = g.edge_weights(u);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    int w = nbrs[i];
    if (!alive[w]) continue;
    total += dpow(D[w], p) - dpow(D[w] - ws[i], p);
  }
  return total;
}

PeelResult finish_result(const Graph& g, std::vector<int> order, double p, PeelStats stats) {
  PeelResult res;
  res.order = std::move(order);
  res.per_suffix = suffix_densities(g, res.order, p);
  SuffixPick pick = best_suffix(res.per_suffix);
  res.best_start = pick.start;
  res.best_density = pick.density;
  res.best_set = VertexSet(g.n());
  if (pick.start >= 0)
    for (std::size_t i = pick.start; i < res.order.size(); ++i) res.best_set.add(res.order[i]);
  res.stats = std::move(stats);
  return res;
}

}  // namespace

PeelResult peel_with_loads(const Graph& g, double p, double eps,
                           const std::vector<double>* loads,
                           std::vector<double>* charge_out, LazyAudit* audit) {
  check_finite_p(p);
  if (p <= 0.0) throw std::invalid_argument("peeling by f_p marginals requires p > 0");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
  auto t0 = std::chrono::steady_clock::now();

  int n = g.n();
  PeelStats stats;
  stats.refreshes_per_vertex.assign(n, 0);
  if (charge_out) charge_out->assign(n, 0.0);
  if (n == 0) return finish_result(g, {}, p, std::move(stats));

  const double refresh_factor = 1.0 + eps / p;
  std::vector<double> D(n), Dp(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) D[v] = Dp[v] = g.weighted_degree(v);

  IndexedMinHeap heap(n);
  for (int v = 0; v < n; ++v) {
    double a = dpow(D[v], p);
    auto nbrs = g.neighbors(v);
    auto ws = g.edge_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      a += dpow(D[nbrs[i]], p) - dpow(D[nbrs[i]] - ws[i], p);
    heap.set_initial(v, (loads ? (*loads)[v] : 0.0) + a);
  }
  heap.build();

  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n - 1; ++step) {
    if (audit) {
      // Key-quality audit against the exact marginals, before this pop.
      for (int u = 0; u < n; ++u) {
        if (!alive[u]) continue;
        double a = heap.key(u) - (loads ? (*loads)[u] : 0.0);
        double exact = exact_marginal(g, alive, D, u, p);
        if (exact > 0.0) {
          audit->max_over_ratio = std::max(audit->max_over_ratio, a / exact);
          audit->max_under_rel = std::max(audit->max_under_rel, (exact - a) / exact);
        }
      }
    }
    int v = heap.pop_min();
    ++stats.pops;
    if (charge_out) (*charge_out)[v] = heap.key(v) - (loads ? (*loads)[v] : 0.0);
    alive[v] = 0;
    order.push_back(v);

    auto nbrs = g.neighbors(v);
    auto ws = g.edge_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      int u = nbrs[i];
      if (!alive[u]) continue;
      double c = ws[i];
      double a = heap.key(u);
      a -= dpow(D[u], p) - dpow(D[u] - c, p);      // u's own-degree term drops
      a -= dpow(Dp[v], p) - dpow(Dp[v] - c, p);    // v leaves u's neighbor sum
      D[u] -= c;
      heap.update(u, a);
      if (Dp[u] > refresh_factor * D[u]) {
        // Propagate u's exact degree into every surviving neighbor's key.
        auto un = g.neighbors(u);
        auto uw = g.edge_weights(u);
        for (std::size_t j = 0; j < un.size(); ++j) {
          int w = un[j];
          if (!alive[w]) continue;
          double cw = uw[j];
          double stale = dpow(Dp[u], p) - dpow(Dp[u] - cw, p);
          double fresh = dpow(D[u], p) - dpow(D[u] - cw, p);
          heap.update(w, heap.key(w) - stale + fresh);
        }
        Dp[u] = D[u];
        ++stats.refresh_events;
        ++stats.refreshes_per_vertex[u];
      }
    }
  }
  order.push_back(heap.pop_min());
  ++stats.pops;

  stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish_result(g, std::move(order), p, std::move(stats));
}

PeelResult greedy_p(const Graph& g, double p) { return peel_with_loads(g, p, 0.0, nullptr, nullptr); }

PeelResult lazy_greedy_p(const Graph& g, double p, double eps, LazyAudit* audit) {
  return peel_with_loads(g, p, eps, nullptr, nullptr, audit);
}

std::vector<int> load_degree_order(const Graph& g, const std::vector<double>& loads,
                                   std::vector<double>* charge_out) {
  int n = g.n();
  if (static_cast<int>(loads.size()) != n)
    throw std::invalid_argument("load_degree_order: loads must cover every vertex");
  if (charge_out) charge_out->assign(n, 0.0);
  std::vector<int> order;
  order.reserve(n);
  if (n == 0) return order;

  if (!g.weighted()) {
    // Integer keys: load + current degree, both integral on unweighted
    // graphs; each neighbor loss lowers a key by exactly 1.
    std::vector<long long> key(n);
    std::vector<int> deg(n);
    long long max_key = 0;
    for (int v = 0; v < n; ++v) {
      long long load = std::llround(loads[v]);
      deg[v] = g.degree(v);
      key[v] = load + deg[v];
      max_key = std::max(max_key, key[v]);
    }
    BucketQueue queue(std::move(key), max_key);
    std::vector<char> alive(n, 1);
    for (int step = 0; step < n; ++step) {
      int v = queue.pop_min();
      alive[v] = 0;
      if (charge_out) (*charge_out)[v] = step + 1 < n ? deg[v] : 0.0;
      order.push_back(v);
      for (int u : g.neighbors(v)) {
        if (!alive[u]) continue;
        --deg[u];
        queue.decrement(u);
      }
    }
    return order;
  }

  // Weighted: same peel with real keys via the indexed heap.
  IndexedMinHeap heap(n);
  std::vector<double> deg(n);
  for (int v = 0; v < n; ++v) {
    deg[v] = g.weighted_degree(v);
    heap.set_initial(v, loads[v] + deg[v]);
  }
  heap.build();
  std::vector<char> alive(n, 1);
  for (int step = 0; step < n; ++step) {
    int v = heap.pop_min();
    alive[v] = 0;
    if (charge_out) (*charge_out)[v] = step + 1 < n ? deg[v] : 0.0;
    order.push_back(v);
    auto nbrs = g.neighbors(v);
    auto ws = g.edge_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      int u = nbrs[i];
      if (!alive[u]) continue;
      deg[u] -= ws[i];
      heap.update(u, heap.key(u) - ws[i]);
    }
  }
  return order;
}

std::vector<int> simple_greedy_order(const Graph& g) {
  return load_degree_order(g, std::vector<double>(g.n(), 0.0), nullptr);
}

PeelResult simple_greedy_p(const Graph& g, double p) {
  check_p(p);
  if (p > 1.0) throw std::invalid_argument("simple_greedy_p: requires p <= 1");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<int> order = simple_greedy_order(g);
  PeelStats stats;
  stats.pops = g.n();
  stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish_result(g, std::move(order), p, std::move(stats));
}

CoreResult degeneracy_maxcore(const Graph& g) {
  CoreResult res;
  res.core = VertexSet(g.n());
  int n = g.n();
  if (n == 0) return res;

  // Min-degree peel on unweighted degree counts, then the best min-degree
  // suffix under the shared tie rule (reverse insertion sweep).
  std::vector<int> order;
  if (!g.weighted()) {
    order = simple_greedy_order(g);
  } else {
    std::vector<long long> key(n);
    std::vector<int> deg(n);
    long long max_key = 0;
    for (int v = 0; v < n; ++v) {
      deg[v] = g.degree(v);
      key[v] = deg[v];
      max_key = std::max(max_key, key[v]);
    }
    BucketQueue queue(std::move(key), max_key);
    std::vector<char> alive(n, 1);
    for (int step = 0; step < n; ++step) {
      int v = queue.pop_min();
      alive[v] = 0;
      order.push_back(v);
      for (int u : g.neighbors(v)) {
        if (!alive[u]) continue;
        --deg[u];
        queue.decrement(u);
      }
    }
  }

  std::vector<Density> min_deg(n);
  std::vector<int> deg(n, 0);
  std::vector<char> in(n, 0);
  std::multiset<int> degrees;
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    int dv = 0;
    for (int u : g.neighbors(v)) {
      if (!in[u]) continue;
      degrees.erase(degrees.find(deg[u]));
      ++deg[u];
      degrees.insert(deg[u]);
      ++dv;
    }
    deg[v] = dv;
    in[v] = 1;
    degrees.insert(dv);
    min_deg[i] = Density::of(static_cast<double>(*degrees.begin()));
  }
  SuffixPick pick = best_suffix(min_deg);
  res.degeneracy = static_cast<int>(std::llround(pick.density.value));
  for (int i = pick.start; i < n; ++i) res.core.add(order[i]);
  return res;
}

}  // namespace pmdsg
