#include "blowup/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

Rational bipartite_density(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long long na = a.count(), nb = b.count();
  if (na == 0 || nb == 0) fail(Errc::EmptyPart, "bipartite_density on empty part");
  return Rational(g.edges_between(a, b), na * nb);
}

long long count_triangles_spanning(const Graph& g, const VertexSet& a, const VertexSet& b,
                                   const VertexSet& c) {
  long long t = 0;
  for (int u = a.first(); u >= 0; u = a.next(u)) {
    Bitset nb = g.neighbors(u) & b;
    Bitset nc = g.neighbors(u) & c;
    for (int v = nb.first(); v >= 0; v = nb.next(v)) t += g.neighbors(v).intersection_count(nc);
  }
  return t;
}

Rational triangle_density(const Graph& g, const VertexSet& a, const VertexSet& b,
                          const VertexSet& c) {
  long long na = a.count(), nb = b.count(), nc = c.count();
  if (na == 0 || nb == 0 || nc == 0) fail(Errc::EmptyPart, "triangle_density on empty part");
  return Rational(count_triangles_spanning(g, a, b, c), na * nb * nc);
}

long long count_cliques(const Graph& g, int k) {
  if (k < 1) fail(Errc::BadParams, "count_cliques requires k >= 1");
  if (k == 1) return g.n();
  // Ordered extension: candidates are neighbors with larger id, so every
  // clique is generated once.
  long long total = 0;
  std::function<void(int, const Bitset&)> rec = [&](int depth, const Bitset& cand) {
    if (depth == k - 1) {
      total += cand.count();
      return;
    }
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      Bitset next = cand & g.neighbors(v);
      // keep only ids > v
      for (int u = next.first(); u >= 0 && u <= v; u = next.next(u)) next.reset(u);
      rec(depth + 1, next);
    }
  };
  Bitset all = Bitset::full(g.n());
  for (int v = 0; v < g.n(); ++v) {
    Bitset cand = g.neighbors(v);
    for (int u = cand.first(); u >= 0 && u <= v; u = cand.next(u)) cand.reset(u);
    rec(1, cand);
  }
  (void)all;
  return total;
}

long long count_spanning_cliques(const Graph& g, const std::vector<VertexSet>& parts) {
  int k = int(parts.size());
  if (k == 0) return 0;
  long long total = 0;
  std::function<void(int, Bitset)> rec = [&](int depth, Bitset allowed) {
    Bitset cand = allowed & parts[depth];
    if (depth == k - 1) {
      total += cand.count();
      return;
    }
    for (int v = cand.first(); v >= 0; v = cand.next(v)) rec(depth + 1, allowed & g.neighbors(v));
  };
  rec(0, Bitset::full(g.n()));
  return total;
}

long long count_labeled_copies(const Graph& g, const Graph& pattern) {
  int h = pattern.n();
  if (h == 0) return 1;
  std::vector<int> order(h);
  for (int i = 0; i < h; ++i) order[i] = i;
  // place higher-degree pattern vertices first
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  std::vector<int> pos(h, -1);
  for (int i = 0; i < h; ++i) pos[order[i]] = i;

  long long total = 0;
  std::vector<int> image(h, -1);
  Bitset used(g.n());
  std::function<void(int)> rec = [&](int depth) {
    int pv = order[depth];
    Bitset cand = Bitset::full(g.n());
    cand.subtract(used);
    for (int q = pattern.neighbors(pv).first(); q >= 0; q = pattern.neighbors(pv).next(q))
      if (pos[q] < depth) cand &= g.neighbors(image[q]);
    if (depth == h - 1) {
      total += cand.count();
      return;
    }
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      image[pv] = v;
      used.set(v);
      rec(depth + 1);
      used.reset(v);
      image[pv] = -1;
    }
  };
  rec(0);
  return total;
}

long long count_aligned_copies(const Graph& g, const Graph& pattern,
                               const std::vector<VertexSet>& parts) {
  int h = pattern.n();
  if (int(parts.size()) != h) fail(Errc::BadParams, "one part per pattern vertex required");
  if (h == 0) return 1;
  long long total = 0;
  std::vector<int> image(h, -1);
  Bitset used(g.n());
  std::function<void(int)> rec = [&](int depth) {
    Bitset cand = parts[depth];
    cand.subtract(used);
    for (int q = pattern.neighbors(depth).first(); q >= 0 && q < depth;
         q = pattern.neighbors(depth).next(q))
      cand &= g.neighbors(image[q]);
    if (depth == h - 1) {
      total += cand.count();
      return;
    }
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      image[depth] = v;
      used.set(v);
      rec(depth + 1);
      used.reset(v);
    }
  };
  rec(0);
  return total;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) n += s;
  Graph g(n);
  int a_start = 0;
  for (size_t i = 0; i < part_sizes.size(); ++i) {
    int b_start = a_start + part_sizes[i];
    for (int u = a_start; u < a_start + part_sizes[i]; ++u)
      for (int v = b_start; v < n; ++v) g.add_edge(u, v);
    a_start = b_start;
  }
  return g;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  Graph g;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    if (n < 0) {
      std::string tag;
      ls >> tag >> n;
      if (tag != "n" || ls.fail() || n < 0) fail(Errc::ParseError, "expected header 'n <count>'");
      g = Graph(n);
      continue;
    }
    int u, v;
    ls >> u >> v;
    if (ls.fail()) fail(Errc::ParseError, "expected 'u v' pair: " + line);
    if (u < 0 || v < 0 || u >= n || v >= n) fail(Errc::ParseError, "vertex id out of range");
    g.add_edge(u, v);
  }
  if (n < 0) fail(Errc::ParseError, "missing header line");
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.n() << "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
      out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot open " + path + " for writing");
  write_edge_list(out, g);
}

std::vector<VertexSet> read_partition_file(const std::string& path, int universe) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::vector<VertexSet> parts;
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    VertexSet part(universe);
    int v;
    while (ls >> v) {
      if (v < 0 || v >= universe) fail(Errc::ParseError, "vertex id out of range in partition");
      part.set(v);
    }
    parts.push_back(part);
  }
  return parts;
}

void write_partition_file(const std::string& path, const std::vector<VertexSet>& parts) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot open " + path + " for writing");
  for (const auto& p : parts) {
    bool first = true;
    for (int v = p.first(); v >= 0; v = p.next(v)) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
}

}  // namespace blowup
