#pragma once

#include <functional>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

// k pairwise-disjoint parts with a k-uniform edge relation among them.
// For k = 2 the relation is a view over the host graph's adjacency; for
// k >= 3 edges are stored explicitly as part-aligned tuples.
struct KPartiteSystem {
  GraphPtr host;
  std::vector<VertexSet> parts;
  std::vector<std::vector<int>> tuples;  // k >= 3 only; tuples[e][i] in parts[i]

  int k() const { return int(parts.size()); }
  bool explicit_edges() const { return k() != 2; }

  long long part_size_product() const {
    long long p = 1;
    for (const auto& s : parts) p *= s.count();
    return p;
  }

  long long edge_count() const;
  // Edge count restricted to subsets X_i of the parts.
  long long edge_count_in(const std::vector<VertexSet>& subsets) const;
  Rational density() const;

  // New system on subsets of the parts (relation induced; tuples filtered).
  KPartiteSystem restrict(const std::vector<VertexSet>& subsets) const;

  static KPartiteSystem bipartite_view(GraphPtr g, VertexSet a, VertexSet b);
  // Parts plus the spanning k-clique relation of the host, enumerated.
  static KPartiteSystem spanning_cliques(GraphPtr g, std::vector<VertexSet> parts);
};

Rational kpartite_density(const KPartiteSystem& s);

// A KPartiteSystem plus a special part C; the bipartite graph between C and
// the union of the parts is the host graph's adjacency.
struct MixedGraph {
  KPartiteSystem system;
  VertexSet c_part;

  const Graph& g() const { return *system.host; }
  int k() const { return system.k(); }

  VertexSet neighborhood_in_part(int c, int i) const {
    return g().neighbors(c) & system.parts[i];
  }
  // Vertices of C adjacent to every vertex of the given k-edge.
  VertexSet extenders(const std::vector<int>& edge) const;
};

long long extension_count(const MixedGraph& m);
Rational min_extension_density(const MixedGraph& m);
KPartiteSystem restrict_to_extension(const MixedGraph& m, int c);

// Apply fn to each k-edge of the system (as a part-aligned vertex tuple).
void for_each_edge(const KPartiteSystem& s, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace blowup
