#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pmdsg {

// Immutable undirected graph in CSR form, optionally edge-weighted.
//
// Every construction path funnels through the same preprocessing: parallel
// edges are collapsed (weights summed when weighted, deduplicated when not),
// self-loops are dropped, vertex ids are compacted to 0..n-1 preserving
// first-seen order, and isolated vertices are removed. Adjacency lists are
// sorted by neighbor id. Original input labels survive in a side table for
// output.
class Graph {
 public:
  Graph() = default;

  // Parses "u v" or "u v w" lines; '#' starts a comment line. Lines may end
  // in LF or CRLF. Throws std::runtime_error with a line number on malformed
  // input or non-positive weight.
  static Graph load_edge_list(std::istream& in, bool weighted);
  static Graph load_edge_list_file(const std::string& path, bool weighted);

  // Builds from raw (label_u, label_v, weight) triples, applying the full
  // preprocessing pipeline. When weighted is false all weights become 1 and
  // duplicates collapse without summing.
  struct RawEdge {
    long long u;
    long long v;
    double w;
  };
  static Graph from_raw_edges(const std::vector<RawEdge>& edges, bool weighted);

  static Graph clique(int k);
  static Graph complete_bipartite(int a, int b);
  // Vertex i is adjacent to i +- off (mod n) for each offset. Offsets must be
  // distinct and lie in [1, n/2]; offset n/2 requires n even.
  static Graph circulant(int n, const std::vector<int>& offsets);
  static Graph disjoint_union(const std::vector<Graph>& parts);

  int n() const { return n_; }
  long long m() const { return m_; }
  bool weighted() const { return weighted_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  std::span<const double> edge_weights(int v) const {
    return {w_.data() + off_[v], w_.data() + off_[v + 1]};
  }
  int degree(int v) const { return static_cast<int>(off_[v + 1] - off_[v]); }
  double weighted_degree(int v) const { return wdeg_[v]; }
  long long label(int v) const { return label_[v]; }
  bool has_edge(int u, int v) const;

  // Multiset of unweighted degrees, sorted ascending.
  std::vector<int> degree_multiset() const;

  void write_edge_list(std::ostream& out) const;

  // Checks the representation invariants (symmetry, sortedness, positive
  // weights, no self-loops or isolated vertices, exact degree sums).
  bool validate() const;

 private:
  int n_ = 0;
  long long m_ = 0;
  bool weighted_ = false;
  std::vector<std::size_t> off_;
  std::vector<int> adj_;
  std::vector<double> w_;
  std::vector<double> wdeg_;
  std::vector<long long> label_;
};

// Subset of a graph's vertices: constant-time membership plus a size count.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : in_(universe, 0) {}
  static VertexSet of(int universe, std::span<const int> vertices);
  static VertexSet full(int universe);

  void add(int v) {
    if (!in_[v]) {
      in_[v] = 1;
      ++size_;
    }
  }
  void remove(int v) {
    if (in_[v]) {
      in_[v] = 0;
      --size_;
    }
  }
  bool contains(int v) const { return in_[v] != 0; }
  int size() const { return size_; }
  int universe() const { return static_cast<int>(in_.size()); }
  // Members in increasing vertex order.
  std::vector<int> members() const;

 private:
  std::vector<char> in_;
  int size_ = 0;
};

}  // namespace pmdsg
