#include "blowup/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "blowup/errors.hpp"

namespace blowup {
namespace oracle {

namespace {

bool tuple_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  int sa = 0, sb = 0;
  for (const auto& s : a) sa += s.count();
  for (const auto& s : b) sb += s.count();
  if (sa != sb) return sa < sb;
  for (size_t i = 0; i < a.size(); ++i) {
    auto va = a[i].to_vector(), vb = b[i].to_vector();
    if (va != vb) return va < vb;
  }
  return false;
}

}  // namespace

BicliqueWitness max_biclique_bruteforce(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.count() + y.count() > 24)
    fail(Errc::TooLargeForExhaustive, "max_biclique_bruteforce guard exceeded");
  const VertexSet& small = x.count() <= y.count() ? x : y;
  const VertexSet& large = x.count() <= y.count() ? y : x;
  std::vector<int> sv = small.to_vector();

  BicliqueWitness best;
  best.x = VertexSet(g.n());
  best.y = VertexSet(g.n());
  for (uint32_t mask = 1; mask < (uint32_t{1} << sv.size()); ++mask) {
    int ssz = std::popcount(mask);
    if (ssz <= best.t) continue;  // t <= |S|, so larger S is required to improve
    VertexSet cn = large;
    for (size_t i = 0; i < sv.size() && !cn.empty(); ++i)
      if ((mask >> i) & 1) cn &= g.neighbors(sv[i]);
    int t = std::min(ssz, cn.count());
    if (t <= best.t) continue;
    VertexSet side(g.n()), other(g.n());
    int taken = 0;
    for (size_t i = 0; i < sv.size() && taken < t; ++i)
      if ((mask >> i) & 1) { side.set(sv[i]); ++taken; }
    taken = 0;
    for (int v = cn.first(); v >= 0 && taken < t; v = cn.next(v), ++taken) other.set(v);
    best.t = t;
    best.x = x.count() <= y.count() ? side : other;
    best.y = x.count() <= y.count() ? other : side;
  }
  return best;
}

BlowupCertificate max_blowup_bruteforce(const Graph& g, const Graph& pattern,
                                        const std::vector<VertexSet>* parts) {
  const int h = pattern.n();
  const bool triangle = h == 3 && pattern.edge_count() == 3;
  if (g.n() > (triangle ? 14 : 12))
    fail(Errc::TooLargeForExhaustive, "max_blowup_bruteforce guard exceeded");
  const bool complete = pattern.edge_count() == (long long)h * (h - 1) / 2;

  std::vector<VertexSet> classes(h, VertexSet(g.n()));
  std::vector<VertexSet> found;
  VertexSet used(g.n());

  std::function<bool(int, int)> place = [&](int t, int ci) -> bool {
    if (ci == h) {
      found = classes;
      return true;
    }
    VertexSet cand = parts ? (*parts)[ci] : VertexSet::full(g.n());
    cand.subtract(used);
    for (int j = 0; j < ci; ++j)
      if (pattern.has_edge(ci, j))
        for (int v = classes[j].first(); v >= 0; v = classes[j].next(v)) cand &= g.neighbors(v);
    std::vector<int> cv = cand.to_vector();
    if (int(cv.size()) < t) return false;
    // interchangeable classes of a complete pattern: force increasing minima
    int floor_id = -1;
    if (complete && !parts && ci > 0) floor_id = classes[ci - 1].first();
    std::vector<int> sel;
    std::function<bool(size_t)> pick = [&](size_t from) -> bool {
      if (int(sel.size()) == t) {
        classes[ci] = VertexSet::from_vector(g.n(), sel);
        for (int v : sel) used.set(v);
        bool ok = place(t, ci + 1);
        for (int v : sel) used.reset(v);
        if (!ok) classes[ci] = VertexSet(g.n());
        return ok;
      }
      for (size_t i = from; i + (t - sel.size()) <= cv.size(); ++i) {
        if (sel.empty() && cv[i] <= floor_id) continue;
        // class vertices must fit pattern self-relations: none (simple graph)
        sel.push_back(cv[i]);
        if (pick(i + 1)) return true;
        sel.pop_back();
      }
      return false;
    };
    return pick(0);
  };

  int t_cap = g.n() / std::max(h, 1);
  if (parts)
    for (int i = 0; i < h; ++i) t_cap = std::min(t_cap, (*parts)[i].count());
  for (int t = t_cap; t >= 1; --t) {
    for (auto& c : classes) c.clear();
    used.clear();
    if (place(t, 0)) {
      BlowupCertificate cert;
      cert.pattern = pattern;
      cert.classes = found;
      cert.t = t;
      return cert;
    }
  }
  return BlowupCertificate::empty(pattern, g.n());
}

EnergyMaximizer max_energy_subsystem_bruteforce(const KPartiteSystem& s, double R) {
  int total = 0;
  for (const auto& p : s.parts) total += p.count();
  if (total > 24) fail(Errc::TooLargeForExhaustive, "max_energy_subsystem guard exceeded");

  EnergyMaximizer out;
  if (s.edge_count() == 0) {
    out.system = s;
    out.log2_e = 0;
    return out;
  }

  const int k = s.k();
  std::vector<std::vector<int>> members;
  for (const auto& p : s.parts) members.push_back(p.to_vector());

  // k = 2 fast path: adjacency rows over member indices
  std::vector<uint32_t> rows;
  if (k == 2)
    for (int a : members[0]) {
      uint32_t r = 0;
      for (size_t j = 0; j < members[1].size(); ++j)
        if (s.host->has_edge(a, members[1][j])) r |= uint32_t{1} << j;
      rows.push_back(r);
    }

  auto eval = [&](const std::vector<uint32_t>& masks) -> long double {
    long long prod = 1;
    for (auto m : masks) prod *= std::popcount(m);
    if (prod == 0) return -1e30L;
    long long e = 0;
    if (k == 2) {
      uint32_t ma = masks[0];
      while (ma) {
        int i = std::countr_zero(ma);
        ma &= ma - 1;
        e += std::popcount(rows[i] & masks[1]);
      }
    } else {
      std::vector<VertexSet> sets(k, VertexSet(s.host->n()));
      for (int i = 0; i < k; ++i)
        for (size_t j = 0; j < members[i].size(); ++j)
          if ((masks[i] >> j) & 1) sets[i].set(members[i][j]);
      e = s.edge_count_in(sets);
    }
    return log2_energy(prod, e, R);
  };

  auto to_sets = [&](const std::vector<uint32_t>& masks) {
    std::vector<VertexSet> sets(k, VertexSet(s.host->n()));
    for (int i = 0; i < k; ++i)
      for (size_t j = 0; j < members[i].size(); ++j)
        if ((masks[i] >> j) & 1) sets[i].set(members[i][j]);
    return sets;
  };

  std::vector<uint32_t> masks(k, 0);
  long double best = -1e30L;
  std::function<void(int, const std::function<void()>&)> walk = [&](int depth,
                                                                    const std::function<void()>& fn) {
    if (depth == k) {
      fn();
      return;
    }
    for (uint32_t m = 0; m < (uint32_t{1} << members[depth].size()); ++m) {
      masks[depth] = m;
      walk(depth + 1, fn);
    }
  };
  walk(0, [&] { best = std::max(best, eval(masks)); });

  std::vector<VertexSet> winner;
  walk(0, [&] {
    if (eval(masks) < best - kEnergyLogTol) return;
    auto sets = to_sets(masks);
    if (winner.empty() || tuple_less(sets, winner)) winner = std::move(sets);
  });
  out.system = s.restrict(winner);
  out.log2_e = best;
  return out;
}

std::optional<SwitcherReport> find_switcher_bruteforce(const Graph& g, const VertexSet& a,
                                                       const VertexSet& b, const VertexSet& c,
                                                       int m, double mu) {
  if (a.count() + b.count() + c.count() > 18)
    fail(Errc::TooLargeForExhaustive, "find_switcher_bruteforce guard exceeded");
  std::vector<int> av = a.to_vector(), bv = b.to_vector(), cv = c.to_vector();
  for (uint32_t ma = 1; ma < (uint32_t{1} << av.size()); ++ma) {
    if (std::popcount(ma) < m) continue;
    VertexSet x(g.n());
    for (size_t i = 0; i < av.size(); ++i)
      if ((ma >> i) & 1) x.set(av[i]);
    for (uint32_t mb = 1; mb < (uint32_t{1} << bv.size()); ++mb) {
      if (std::popcount(mb) < m) continue;
      VertexSet y(g.n());
      for (size_t i = 0; i < bv.size(); ++i)
        if ((mb >> i) & 1) y.set(bv[i]);
      for (uint32_t mc = 1; mc < (uint32_t{1} << cv.size()); ++mc) {
        if (std::popcount(mc) < m) continue;
        VertexSet z(g.n());
        for (size_t i = 0; i < cv.size(); ++i)
          if ((mc >> i) & 1) z.set(cv[i]);
        if (is_switcher(g, x, y, z, m, mu)) {
          SwitcherReport r;
          r.x = x;
          r.y = y;
          r.z = z;
          r.m = m;
          r.mu = mu;
          long long tri = count_triangles_spanning(g, x, y, z);
          r.kappa3 = double(tri) / (double(x.count()) * y.count() * z.count());
          r.dxy = double(g.edges_between(x, y)) / (double(x.count()) * y.count());
          return r;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace oracle
}  // namespace blowup
