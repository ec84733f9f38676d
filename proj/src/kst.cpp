#include "blowup/kst.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

// Extend a balanced biclique (sx, sy) greedily, one vertex per side at a time.
void grow_biclique(const Graph& g, const VertexSet& x, const VertexSet& y, VertexSet& sx,
                   VertexSet& sy) {
  auto candidates = [&](const VertexSet& pool, const VertexSet& taken, const VertexSet& other) {
    VertexSet c(g.n());
    for (int v = pool.first(); v >= 0; v = pool.next(v))
      if (!taken.test(v) && other.is_subset_of(g.neighbors(v))) c.set(v);
    return c;
  };
  while (true) {
    VertexSet cx = candidates(x, sx, sy);
    VertexSet cy = candidates(y, sy, sx);
    int best_u = -1, best_v = -1, best_score = -1;
    for (int u = cx.first(); u >= 0; u = cx.next(u)) {
      Bitset uy = g.neighbors(u) & cy;
      for (int v = uy.first(); v >= 0; v = uy.next(v)) {
        int score = g.neighbors(u).intersection_count(cy) + g.neighbors(v).intersection_count(cx);
        if (score > best_score) {
          best_score = score;
          best_u = u;
          best_v = v;
        }
      }
    }
    if (best_u < 0) return;
    sx.set(best_u);
    sy.set(best_v);
  }
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& side, const VertexSet& into) {
  VertexSet cn = into;
  for (int v = side.first(); v >= 0; v = side.next(v)) cn &= g.neighbors(v);
  return cn;
}

// Exhaustive search for a t-subset of `side` with >= t common neighbors in
// `into`, pruning on the running intersection.
bool find_tsubset(const Graph& g, const std::vector<int>& side, const VertexSet& into, int t,
                  VertexSet& out_side, VertexSet& out_cn) {
  std::vector<int> chosen;
  bool found = false;
  std::function<void(size_t, VertexSet)> rec = [&](size_t start, VertexSet cn) {
    if (found) return;
    if (int(chosen.size()) == t) {
      if (cn.count() >= t) {
        out_side = VertexSet::from_vector(g.n(), chosen);
        out_cn = cn;
        found = true;
      }
      return;
    }
    for (size_t i = start; i + (t - chosen.size()) <= side.size(); ++i) {
      VertexSet next = cn & g.neighbors(side[i]);
      if (next.count() < t) continue;
      chosen.push_back(side[i]);
      rec(i + 1, next);
      chosen.pop_back();
      if (found) return;
    }
  };
  rec(0, into);
  return found;
}

}  // namespace

int kst_order(long long size_x, long long size_y, double p) {
  long long m = std::min(size_x, size_y);
  if (m <= 1) return 0;
  return kst_order_log(std::log2((double)m), p);
}

int kst_order_log(double log2_min_size, double p) {
  if (!(p > 0 && p <= 0.5)) fail(Errc::BadParams, "kst_order requires p in (0, 1/2]");
  double v = log2_min_size / (2.0 * std::log2(1.0 / p));
  return int(std::floor(v + 1e-9));
}

int greedy_biclique_order(const Graph& g, const VertexSet& x, const VertexSet& y) {
  VertexSet sx(g.n()), sy(g.n());
  grow_biclique(g, x, y, sx, sy);
  return sx.count();
}

BlowupCertificate extract_biclique(const Graph& g, const VertexSet& x, const VertexSet& y,
                                   double p) {
  if (!(p > 0 && p <= 0.5)) fail(Errc::BadParams, "extract_biclique requires p in (0, 1/2]");
  long long nx = x.count(), ny = y.count();
  if (nx == 0 || ny == 0) fail(Errc::EmptyPart, "extract_biclique on empty part");
  long long e = g.edges_between(x, y);
  if ((long double)e < (long double)p * nx * ny - 1e-9L)
    fail(Errc::DensityTooLow, "pair density below p");

  int t = kst_order(nx, ny, p);
  Graph k2 = complete_graph(2);

  VertexSet sx(g.n()), sy(g.n());
  bool have = false;

  if (t > 0) {
    // Greedy fast path: seed with the t largest codegrees on each side in
    // turn, improve by single swaps.
    auto try_side = [&](const VertexSet& seed_side, const VertexSet& other) -> bool {
      std::vector<int> verts = seed_side.to_vector();
      std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return g.neighbors(a).intersection_count(other) > g.neighbors(b).intersection_count(other);
      });
      if (int(verts.size()) < t) return false;
      std::vector<int> sel(verts.begin(), verts.begin() + t);
      auto cn_of = [&](const std::vector<int>& s) {
        VertexSet cn = other;
        for (int v : s) cn &= g.neighbors(v);
        return cn;
      };
      VertexSet cn = cn_of(sel);
      int budget = int(verts.size());
      while (cn.count() < t && budget-- > 0) {
        int bi = -1, bv = -1, bc = cn.count();
        for (int v : verts) {
          if (std::find(sel.begin(), sel.end(), v) != sel.end()) continue;
          for (int i = 0; i < t; ++i) {
            int old = sel[i];
            sel[i] = v;
            int c = cn_of(sel).count();
            sel[i] = old;
            if (c > bc) { bc = c; bi = i; bv = v; }
          }
        }
        if (bi < 0) break;
        sel[bi] = bv;
        cn = cn_of(sel);
      }
      if (cn.count() < t) return false;
      VertexSet side_set = VertexSet::from_vector(g.n(), sel);
      VertexSet cn_t(g.n());
      int taken = 0;
      for (int v = cn.first(); v >= 0 && taken < t; v = cn.next(v), ++taken) cn_t.set(v);
      if (&seed_side == &y) { sx = cn_t; sy = side_set; }
      else { sx = side_set; sy = cn_t; }
      return true;
    };
    have = try_side(y, x) || try_side(x, y);

    if (!have) {
      // Exhaustive fallback over t-subsets of the smaller side; the counting
      // argument guarantees this succeeds.
      const VertexSet& small = nx <= ny ? x : y;
      const VertexSet& large = nx <= ny ? y : x;
      VertexSet side_set(g.n()), cn(g.n());
      if (!find_tsubset(g, small.to_vector(), large, t, side_set, cn)) {
        fail(Errc::PreconditionFailed, "no K_{t,t} found at the guaranteed order");
      }
      VertexSet cn_t(g.n());
      int taken = 0;
      for (int v = cn.first(); v >= 0 && taken < t; v = cn.next(v), ++taken) cn_t.set(v);
      if (nx <= ny) { sx = side_set; sy = cn_t; }
      else { sx = cn_t; sy = side_set; }
      have = true;
    }
  }

  grow_biclique(g, x, y, sx, sy);
  int found = sx.count();
  if (found == 0) return BlowupCertificate::empty(k2, g.n());

  BlowupCertificate cert;
  cert.pattern = k2;
  cert.classes = {sx, sy};
  cert.t = found;
  return cert;
}

}  // namespace blowup
