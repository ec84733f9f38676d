#include "blowup/system.hpp"

#include <functional>

#include "blowup/errors.hpp"

namespace blowup {

long long KPartiteSystem::edge_count() const {
  if (k() == 2) return host->edges_between(parts[0], parts[1]);
  return (long long)tuples.size();
}

long long KPartiteSystem::edge_count_in(const std::vector<VertexSet>& subsets) const {
  if (k() == 2) return host->edges_between(subsets[0], subsets[1]);
  long long e = 0;
  for (const auto& t : tuples) {
    bool inside = true;
    for (int i = 0; i < k(); ++i)
      if (!subsets[i].test(t[i])) { inside = false; break; }
    if (inside) ++e;
  }
  return e;
}

Rational KPartiteSystem::density() const {
  long long prod = part_size_product();
  if (prod == 0) fail(Errc::EmptyPart, "density of system with empty part");
  return Rational(edge_count(), prod);
}

KPartiteSystem KPartiteSystem::restrict(const std::vector<VertexSet>& subsets) const {
  KPartiteSystem out;
  out.host = host;
  out.parts = subsets;
  if (k() != 2) {
    for (const auto& t : tuples) {
      bool inside = true;
      for (int i = 0; i < k(); ++i)
        if (!subsets[i].test(t[i])) { inside = false; break; }
      if (inside) out.tuples.push_back(t);
    }
  }
  return out;
}

KPartiteSystem KPartiteSystem::bipartite_view(GraphPtr g, VertexSet a, VertexSet b) {
  KPartiteSystem s;
  s.host = std::move(g);
  s.parts = {std::move(a), std::move(b)};
  return s;
}

KPartiteSystem KPartiteSystem::spanning_cliques(GraphPtr g, std::vector<VertexSet> parts) {
  KPartiteSystem s;
  s.host = g;
  s.parts = std::move(parts);
  if (s.k() == 2) return s;
  int k = s.k();
  std::vector<int> tuple(k);
  std::function<void(int, Bitset)> rec = [&](int depth, Bitset allowed) {
    Bitset cand = allowed & s.parts[depth];
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      tuple[depth] = v;
      if (depth == k - 1)
        s.tuples.push_back(tuple);
      else
        rec(depth + 1, allowed & g->neighbors(v));
    }
  };
  if (k > 0) rec(0, Bitset::full(g->n()));
  return s;
}

Rational kpartite_density(const KPartiteSystem& s) {
  for (const auto& p : s.parts)
    if (p.empty()) fail(Errc::EmptyPart, "kpartite_density with empty part");
  return s.density();
}

void for_each_edge(const KPartiteSystem& s,
                   const std::function<void(const std::vector<int>&)>& fn) {
  if (s.k() == 2) {
    std::vector<int> e(2);
    for (int u = s.parts[0].first(); u >= 0; u = s.parts[0].next(u)) {
      Bitset nb = s.host->neighbors(u) & s.parts[1];
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        e[0] = u;
        e[1] = v;
        fn(e);
      }
    }
    return;
  }
  for (const auto& t : s.tuples) fn(t);
}

VertexSet MixedGraph::extenders(const std::vector<int>& edge) const {
  VertexSet ext = c_part;
  for (int v : edge) ext &= g().neighbors(v);
  return ext;
}

long long extension_count(const MixedGraph& m) {
  // Two summation orders of the same double count; they must agree.
  long long by_c = 0;
  for (int c = m.c_part.first(); c >= 0; c = m.c_part.next(c)) {
    std::vector<VertexSet> nbhds(m.k(), VertexSet(m.g().n()));
    for (int i = 0; i < m.k(); ++i) nbhds[i] = m.neighborhood_in_part(c, i);
    by_c += m.system.edge_count_in(nbhds);
  }
  long long by_edge = 0;
  for_each_edge(m.system, [&](const std::vector<int>& e) { by_edge += m.extenders(e).count(); });
  if (by_c != by_edge) fail(Errc::BadParams, "extension_count summation orders disagree");
  return by_c;
}

Rational min_extension_density(const MixedGraph& m) {
  long long c_size = m.c_part.count();
  if (c_size == 0) fail(Errc::EmptyPart, "min_extension_density with empty C");
  bool any = false;
  Rational best(1);
  for_each_edge(m.system, [&](const std::vector<int>& e) {
    Rational r(m.extenders(e).count(), c_size);
    if (!any || r < best) best = r;
    any = true;
  });
  return any ? best : Rational(0);  // tau_C = 0 for an edgeless system
}

KPartiteSystem restrict_to_extension(const MixedGraph& m, int c) {
  if (!m.c_part.test(c)) fail(Errc::NotInC, "restrict_to_extension: vertex not in C");
  std::vector<VertexSet> nbhds;
  nbhds.reserve(m.k());
  for (int i = 0; i < m.k(); ++i) nbhds.push_back(m.neighborhood_in_part(c, i));
  return m.system.restrict(nbhds);
}

}  // namespace blowup
