#include "pmdsg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pmdsg {

namespace {

// Canonical undirected key for dedup: low id first.
inline std::pair<int, int> canon(int a, int b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

Graph Graph::from_raw_edges(const std::vector<RawEdge>& edges, bool weighted) {
  // Pass 1: compact labels in first-seen order, skipping self-loops.
  std::unordered_map<long long, int> id_of;
  id_of.reserve(edges.size() * 2);
  std::vector<long long> label;
  auto intern = [&](long long lab) {
    auto [it, fresh] = id_of.try_emplace(lab, static_cast<int>(label.size()));
    if (fresh) label.push_back(lab);
    return it->second;
  };

  struct Half {
    int u, v;
    double w;
  };
  std::vector<Half> kept;
  kept.reserve(edges.size());
  for (const RawEdge& e : edges) {
    if (e.u == e.v) continue;  // self-loop
    if (e.w <= 0.0) throw std::runtime_error("edge weight must be positive");
    int u = intern(e.u);
    int v = intern(e.v);
    auto [a, b] = canon(u, v);
    kept.push_back({a, b, weighted ? e.w : 1.0});
  }

  // Pass 2: collapse duplicates. Sort by endpoint pair; weighted edges sum,
  // unweighted edges keep weight 1.
  std::sort(kept.begin(), kept.end(), [](const Half& x, const Half& y) {
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  std::vector<Half> uniq;
  uniq.reserve(kept.size());
  for (const Half& e : kept) {
    if (!uniq.empty() && uniq.back().u == e.u && uniq.back().v == e.v) {
      if (weighted) uniq.back().w += e.w;
    } else {
      uniq.push_back(e);
    }
  }

  // Pass 3: drop isolated vertices (those touching no surviving edge),
  // re-compacting ids in first-seen order.
  int n_all = static_cast<int>(label.size());
  std::vector<char> touched(n_all, 0);
  for (const Half& e : uniq) touched[e.u] = touched[e.v] = 1;
  std::vector<int> remap(n_all, -1);
  Graph g;
  for (int v = 0; v < n_all; ++v) {
    if (touched[v]) {
      remap[v] = static_cast<int>(g.label_.size());
      g.label_.push_back(label[v]);
    }
  }
  g.n_ = static_cast<int>(g.label_.size());
  g.m_ = static_cast<long long>(uniq.size());
  g.weighted_ = weighted;

  // CSR with both directions, adjacency sorted by neighbor id.
  std::vector<int> deg(g.n_, 0);
  for (const Half& e : uniq) {
    ++deg[remap[e.u]];
    ++deg[remap[e.v]];
  }
  g.off_.assign(g.n_ + 1, 0);
  for (int v = 0; v < g.n_; ++v) g.off_[v + 1] = g.off_[v] + deg[v];
  g.adj_.resize(2 * uniq.size());
  g.w_.resize(2 * uniq.size());
  std::vector<std::size_t> cursor(g.off_.begin(), g.off_.end() - 1);
  for (const Half& e : uniq) {
    int u = remap[e.u], v = remap[e.v];
    g.adj_[cursor[u]] = v;
    g.w_[cursor[u]++] = e.w;
    g.adj_[cursor[v]] = u;
    g.w_[cursor[v]++] = e.w;
  }
  for (int v = 0; v < g.n_; ++v) {
    std::size_t lo = g.off_[v], hi = g.off_[v + 1];
    std::vector<std::pair<int, double>> row;
    row.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) row.emplace_back(g.adj_[i], g.w_[i]);
    std::sort(row.begin(), row.end());
    for (std::size_t i = lo; i < hi; ++i) {
      g.adj_[i] = row[i - lo].first;
      g.w_[i] = row[i - lo].second;
    }
  }
  g.wdeg_.assign(g.n_, 0.0);
  for (int v = 0; v < g.n_; ++v)
    for (double w : g.edge_weights(v)) g.wdeg_[v] += w;
  return g;
}

Graph Graph::load_edge_list(std::istream& in, bool weighted) {
  std::vector<RawEdge> edges;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v) || u < 0 || v < 0) {
      throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                               ": expected \"u v\" with non-negative integers");
    }
    double w = 1.0;
    if (weighted) {
      if (!(ls >> w)) {
        throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                                 ": expected \"u v w\"");
      }
      if (!(w > 0.0)) {
        throw std::runtime_error("edge list validation error at line " + std::to_string(line_no) +
                                 ": weight must be > 0");
      }
    }
    std::string trail;
    if (ls >> trail) {
      if (trail[0] != '#') {
        throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                                 ": trailing token \"" + trail + "\"");
      }
    }
    edges.push_back({u, v, w});
  }
  return from_raw_edges(edges, weighted);
}

Graph Graph::load_edge_list_file(const std::string& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_edge_list(in, weighted);
}

Graph Graph::clique(int k) {
  if (k < 1) throw std::invalid_argument("clique: k must be >= 1");
  std::vector<RawEdge> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v, 1.0});
  return from_raw_edges(edges, false);
}

Graph Graph::complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
  std::vector<RawEdge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v, 1.0});
  return from_raw_edges(edges, false);
}

Graph Graph::circulant(int n, const std::vector<int>& offsets) {
  if (n < 2) throw std::invalid_argument("circulant: n must be >= 2");
  std::vector<char> seen(n / 2 + 1, 0);
  for (int off : offsets) {
    if (off < 1 || off > n / 2) throw std::invalid_argument("circulant: offsets must lie in [1, n/2]");
    if (off == n / 2 && n % 2 != 0)
      throw std::invalid_argument("circulant: offset n/2 requires even n");
    if (seen[off]) throw std::invalid_argument("circulant: offsets must be distinct");
    seen[off] = 1;
  }
  std::vector<RawEdge> edges;
  for (int v = 0; v < n; ++v) {
    for (int off : offsets) {
      int u = (v + off) % n;
      if (v < u) edges.push_back({v, u, 1.0});
      // The wrap-around partner (v, v+off mod n) with v > u is the same edge
      // emitted from the other endpoint; dedup keeps the pair unique anyway.
      else edges.push_back({u, v, 1.0});
    }
  }
  return from_raw_edges(edges, false);
}

Graph Graph::disjoint_union(const std::vector<Graph>& parts) {
  std::vector<RawEdge> edges;
  bool weighted = false;
  long long base = 0;
  for (const Graph& part : parts) weighted = weighted || part.weighted();
  for (const Graph& part : parts) {
    for (int v = 0; v < part.n(); ++v) {
      auto nbrs = part.neighbors(v);
      auto ws = part.edge_weights(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (v < nbrs[i]) edges.push_back({base + v, base + nbrs[i], ws[i]});
      }
    }
    base += part.n();
  }
  return from_raw_edges(edges, weighted);
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::degree_multiset() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

void Graph::write_edge_list(std::ostream& out) const {
  out.precision(17);
  for (int v = 0; v < n_; ++v) {
    auto nbrs = neighbors(v);
    auto ws = edge_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (v < nbrs[i]) {
        out << label_[v] << ' ' << label_[nbrs[i]];
        if (weighted_) out << ' ' << ws[i];
        out << '\n';
      }
    }
  }
}

bool Graph::validate() const {
  if (off_.size() != static_cast<std::size_t>(n_) + 1) return false;
  if (adj_.size() != static_cast<std::size_t>(2 * m_)) return false;
  for (int v = 0; v < n_; ++v) {
    auto nbrs = neighbors(v);
    auto ws = edge_weights(v);
    if (nbrs.empty()) return false;  // isolated vertex survived preprocessing
    double sum = 0.0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      int u = nbrs[i];
      if (u == v || u < 0 || u >= n_) return false;
      if (i > 0 && nbrs[i - 1] >= u) return false;  // sorted, no duplicates
      if (!(ws[i] > 0.0)) return false;
      // Symmetry with equal weight on the reverse direction.
      auto back = neighbors(u);
      auto it = std::lower_bound(back.begin(), back.end(), v);
      if (it == back.end() || *it != v) return false;
      if (edge_weights(u)[it - back.begin()] != ws[i]) return false;
      sum += ws[i];
    }
    if (sum != wdeg_[v]) return false;
  }
  return true;
}

VertexSet VertexSet::of(int universe, std::span<const int> vertices) {
  VertexSet s(universe);
  for (int v : vertices) s.add(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.add(v);
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size_);
  for (int v = 0; v < universe(); ++v)
    if (in_[v]) out.push_back(v);
  return out;
}

}  // namespace pmdsg
