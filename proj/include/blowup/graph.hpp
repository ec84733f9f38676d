#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "blowup/bitset.hpp"
#include "blowup/rational.hpp"

namespace blowup {

// Undirected simple graph over [0, n) with per-vertex adjacency bit sets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

  int n() const { return n_; }

  void add_edge(int u, int v) {
    if (u == v) return;  // no self-loops
    adj_[u].set(v);
    adj_[v].set(u);
  }
  void remove_edge(int u, int v) {
    adj_[u].reset(v);
    adj_[v].reset(u);
  }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  long long edge_count() const {
    long long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
  }

  // Edges with one endpoint in a, the other in b (a, b disjoint).
  long long edges_between(const VertexSet& a, const VertexSet& b) const {
    long long e = 0;
    for (int v = a.first(); v >= 0; v = a.next(v)) e += adj_[v].intersection_count(b);
    return e;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
};

using GraphPtr = std::shared_ptr<const Graph>;

Rational bipartite_density(const Graph& g, const VertexSet& a, const VertexSet& b);
Rational triangle_density(const Graph& g, const VertexSet& a, const VertexSet& b,
                          const VertexSet& c);
long long count_triangles_spanning(const Graph& g, const VertexSet& a, const VertexSet& b,
                                   const VertexSet& c);

// Unlabeled k-cliques in g.
long long count_cliques(const Graph& g, int k);
// Labeled k-cliques with exactly one vertex in each listed part, counted as
// part-aligned tuples (the i-th vertex lies in parts[i]).
long long count_spanning_cliques(const Graph& g, const std::vector<VertexSet>& parts);
// Labeled copies of `pattern` in g: injective edge-preserving maps V(H) -> V(g).
long long count_labeled_copies(const Graph& g, const Graph& pattern);
// Part-aligned copies: pattern vertex i must map into parts[i].
long long count_aligned_copies(const Graph& g, const Graph& pattern,
                               const std::vector<VertexSet>& parts);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);

// Edge-list text format: optional '#' comment lines, a header "n <count>",
// then one "u v" pair per line (0-based).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Partition file: one line per part, space-separated vertex ids.
std::vector<VertexSet> read_partition_file(const std::string& path, int universe);
void write_partition_file(const std::string& path, const std::vector<VertexSet>& parts);

}  // namespace blowup
