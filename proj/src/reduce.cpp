#include "blowup/reduce.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <random>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

constexpr double kTol = 1e-9;

long double pair_density(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long long na = a.count(), nb = b.count();
  if (na == 0 || nb == 0) return 0;
  return (long double)g.edges_between(a, b) / ((long double)na * nb);
}

}  // namespace

std::vector<VertexSet> random_spanning_partition(const Graph& g, int r, double gamma,
                                                 uint64_t seed) {
  if (r < 1) fail(Errc::BadParams, "r must be positive");
  double rfact = 1;
  for (int i = 2; i <= r; ++i) rfact *= i;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<VertexSet> parts(r, VertexSet(g.n()));
    for (int v = 0; v < g.n(); ++v) parts[rng() % r].set(v);
    bool nonempty = true;
    long double prod = 1;
    for (const auto& p : parts) {
      nonempty &= !p.empty();
      prod *= p.count();
    }
    if (!nonempty) continue;
    long long spanning = count_spanning_cliques(g, parts);
    if ((long double)spanning + kTol >= gamma * rfact * prod) return parts;
  }
  fail(Errc::RetriesExhausted, "no partition reached the spanning-clique target");
}

RegularityOutcome regularity_check(const Graph& g, const VertexSet& a, const VertexSet& b,
                                   double epsilon, int budget, uint64_t seed) {
  if (!(epsilon > 0 && epsilon < 0.5)) fail(Errc::BadParams, "epsilon must be in (0, 1/2)");
  std::vector<int> av = a.to_vector(), bv = b.to_vector();
  int na = int(av.size()), nb = int(bv.size());
  if (na == 0 || nb == 0) fail(Errc::EmptyPart, "regularity_check on empty part");
  long double d = pair_density(g, a, b);
  int min_a = int(std::ceil(epsilon * na - kTol));
  int min_b = int(std::ceil(epsilon * nb - kTol));
  min_a = std::max(min_a, 1);
  min_b = std::max(min_b, 1);

  std::vector<uint32_t> rows(na, 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      if (g.has_edge(av[i], bv[j])) rows[i] |= uint32_t{1} << j;

  RegularityOutcome out;
  auto check_pair = [&](uint32_t ma, uint32_t mb) -> bool {
    int sa = std::popcount(ma), sb = std::popcount(mb);
    long long e = 0;
    uint32_t m = ma;
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      e += std::popcount(rows[i] & mb);
    }
    long double dev = std::fabs((long double)e / ((long double)sa * sb) - d);
    if (dev >= epsilon) {
      out.regular = false;
      out.deviation = double(dev);
      out.wa = VertexSet(g.n());
      out.wb = VertexSet(g.n());
      for (int i = 0; i < na; ++i)
        if ((ma >> i) & 1) out.wa.set(av[i]);
      for (int j = 0; j < nb; ++j)
        if ((mb >> j) & 1) out.wb.set(bv[j]);
      return true;
    }
    return false;
  };

  if (na + nb <= 20) {
    out.exhaustive = true;
    for (uint32_t ma = 1; ma < (uint32_t{1} << na); ++ma) {
      if (std::popcount(ma) < min_a) continue;
      for (uint32_t mb = 1; mb < (uint32_t{1} << nb); ++mb) {
        if (std::popcount(mb) < min_b) continue;
        if (check_pair(ma, mb)) return out;
      }
    }
    return out;
  }

  std::mt19937_64 rng(seed);
  auto random_mask = [&](int n, int size) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    uint32_t m = 0;
    for (int i = 0; i < size; ++i) m |= uint32_t{1} << idx[i];
    return m;
  };
  for (int trial = 0; trial < budget; ++trial)
    if (check_pair(random_mask(na, min_a), random_mask(nb, min_b))) return out;
  return out;  // advisory Regular
}

std::vector<Cylinder> cylinder_partition(const Graph& g, const std::vector<VertexSet>& parts,
                                         const RegularityConfig& cfg, uint64_t seed) {
  const int r = int(parts.size());
  if (r < 2) fail(Errc::BadParams, "cylinder_partition requires r >= 2");
  if (!(cfg.epsilon > 0 && cfg.epsilon < 0.5)) fail(Errc::BadParams, "epsilon must be in (0, 1/2)");
  double beta = cfg.beta_floor > 0 ? cfg.beta_floor : std::pow(cfg.epsilon, 4);

  long double full_mass = 1;
  for (const auto& p : parts) full_mass *= p.count();

  struct Work {
    std::vector<VertexSet> sets;
  };
  std::deque<Work> queue;
  queue.push_back({parts});
  std::vector<Cylinder> done;
  uint64_t tick = seed;

  auto irregular_mass = [&] {
    long double m = 0;
    for (const auto& c : done)
      if (!c.regular) {
        long double cm = 1;
        for (const auto& s : c.sets) cm *= s.count();
        m += cm;
      }
    for (const auto& w : queue) {
      long double cm = 1;
      for (const auto& s : w.sets) cm *= s.count();
      m += cm;
    }
    return m / full_mass;
  };

  while (!queue.empty()) {
    Work w = std::move(queue.front());
    queue.pop_front();

    // find a witnessed irregular pair
    int wi = -1, wj = -1;
    RegularityOutcome witness;
    for (int i = 0; i < r && wi < 0; ++i)
      for (int j = i + 1; j < r && wi < 0; ++j) {
        if (w.sets[i].empty() || w.sets[j].empty()) continue;
        RegularityOutcome rc = regularity_check(g, w.sets[i], w.sets[j], cfg.epsilon, 200, ++tick);
        if (!rc.regular) {
          wi = i;
          wj = j;
          witness = rc;
        }
      }
    if (wi < 0) {
      done.push_back({w.sets, true});
      continue;
    }

    // split 4-way along the witness sets, unless the floor would be violated
    auto halves = [&](int part, const VertexSet& ws) {
      VertexSet inside = ws;
      VertexSet outside = w.sets[part];
      outside.subtract(ws);
      return std::pair<VertexSet, VertexSet>(inside, outside);
    };
    auto [ai, ao] = halves(wi, witness.wa);
    auto [bi, bo] = halves(wj, witness.wb);
    long double floor_i = beta * parts[wi].count();
    long double floor_j = beta * parts[wj].count();
    // Split 4-way along the witness; fall back to a 2-way split when only
    // one side can be refined without violating the floor.
    std::vector<VertexSet> pieces_a, pieces_b;
    if (ai.count() >= floor_i && ao.count() >= floor_i && !ai.empty() && !ao.empty())
      pieces_a = {ai, ao};
    else
      pieces_a = {w.sets[wi]};
    if (bi.count() >= floor_j && bo.count() >= floor_j && !bi.empty() && !bo.empty())
      pieces_b = {bi, bo};
    else
      pieces_b = {w.sets[wj]};
    long double cur_mass = 1;
    for (const auto& s : w.sets) cur_mass *= s.count();
    bool can_split = pieces_a.size() + pieces_b.size() > 2;
    if (!can_split || irregular_mass() + cur_mass / full_mass <= cfg.epsilon) {
      done.push_back({w.sets, false});
      continue;
    }
    for (const VertexSet& sa : pieces_a)
      for (const VertexSet& sb : pieces_b) {
        Work child = w;
        child.sets[wi] = sa;
        child.sets[wj] = sb;
        queue.push_back(child);
      }
  }
  return done;
}

CountingBounds counting_lemma_check(const Graph& g, const std::vector<VertexSet>& sets,
                                    const Graph& pattern, double epsilon) {
  const int t = pattern.n();
  if (int(sets.size()) != t) fail(Errc::BadParams, "one set per pattern vertex required");
  long double prod_d = 1;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      if (!pattern.has_edge(i, j)) continue;
      if (sets[i].count() + sets[j].count() > 20)
        fail(Errc::RegularityNotCertified, "pair too large for exhaustive certification");
      RegularityOutcome rc = regularity_check(g, sets[i], sets[j], epsilon, 0, 0);
      if (!rc.regular)
        fail(Errc::RegularityNotCertified, "required pair is not epsilon-regular");
      prod_d *= pair_density(g, sets[i], sets[j]);
    }
  long double size_prod = 1;
  for (const auto& s : sets) size_prod *= s.count();
  long double slack = (long double)epsilon * t * (t - 1) / 2;

  CountingBounds out;
  out.lower = (prod_d - slack) * size_prod;
  out.upper = (prod_d + slack) * size_prod;
  out.actual = (long double)count_aligned_copies(g, pattern, sets);
  if (out.actual < out.lower - kTol || out.actual > out.upper + kTol)
    fail(Errc::PreconditionFailed, "counting bounds violated");
  return out;
}

MixedGraph prune_low_extension_edges(const MixedGraph& m, double tau) {
  const long double threshold = (long double)tau * m.c_part.count();
  MixedGraph out = m;
  if (m.k() == 2) {
    auto host = std::make_shared<Graph>(*m.system.host);
    const VertexSet& a = m.system.parts[0];
    const VertexSet& b = m.system.parts[1];
    for (int u = a.first(); u >= 0; u = a.next(u)) {
      Bitset nb = m.g().neighbors(u) & b;
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        VertexSet ext = m.g().neighbors(u) & m.g().neighbors(v) & m.c_part;
        if ((long double)ext.count() < threshold - kTol) host->remove_edge(u, v);
      }
    }
    out.system = KPartiteSystem::bipartite_view(host, a, b);
    return out;
  }
  std::vector<std::vector<int>> kept;
  for (const auto& t : m.system.tuples) {
    VertexSet ext = m.c_part;
    for (int v : t) ext &= m.g().neighbors(v);
    if ((long double)ext.count() >= threshold - kTol) kept.push_back(t);
  }
  out.system.tuples = std::move(kept);
  return out;
}

ReductionResult regularize_cliques(const Graph& g, int k, double gamma, ReduceStrategy strategy,
                                   uint64_t seed) {
  if (k < 2) fail(Errc::BadParams, "k must be at least 2");
  const int r = k + 1;
  long long labeled = count_labeled_copies(g, complete_graph(r));
  if ((double)labeled + kTol < gamma * std::pow(double(g.n()), r))
    fail(Errc::NotEnoughCliques, "fewer labeled cliques than gamma * N^{k+1}");
  if (labeled == 0) fail(Errc::NotEnoughCliques, "no spanning cliques available");

  std::vector<VertexSet> parts = random_spanning_partition(g, r, gamma, seed);
  GraphPtr host = std::make_shared<Graph>(g);

  auto build_mixed = [&](const std::vector<VertexSet>& sets, int c_index) {
    MixedGraph m;
    std::vector<VertexSet> a_parts;
    for (int i = 0; i < r; ++i)
      if (i != c_index) a_parts.push_back(sets[i]);
    if (k == 2) {
      m.system = KPartiteSystem::bipartite_view(host, a_parts[0], a_parts[1]);
    } else {
      m.system = KPartiteSystem::spanning_cliques(host, a_parts);
    }
    m.c_part = sets[c_index];
    return m;
  };

  auto certify = [&](ReductionResult& res) {
    long double tc = min_extension_density(res.mixed).to_long_double();
    long double d = kpartite_density(res.mixed.system).to_long_double();
    long double tau_floor = std::min(std::pow((long double)gamma, 2.0L / (k + 1)), 0.5L);
    res.certified = res.mixed.system.edge_count() > 0 && tc + kTol >= res.tau &&
                    d * res.tau + kTol >= gamma / 4 && res.tau + kTol >= tau_floor;
  };

  ReductionResult res;
  res.gamma_in = gamma;
  int minp = g.n();
  for (const auto& p : parts) minp = std::min(minp, p.count());
  res.zeta = double(minp) / (double(g.n()) / r);

  if (strategy == ReduceStrategy::pruning) {
    MixedGraph base = build_mixed(parts, r - 1);
    auto feasible = [&](double tau, MixedGraph* keep) -> bool {
      MixedGraph pruned = prune_low_extension_edges(base, tau);
      if (pruned.system.edge_count() == 0) return false;
      long double d = kpartite_density(pruned.system).to_long_double();
      bool ok = d * tau + kTol >= gamma / 4;
      if (ok && keep) *keep = std::move(pruned);
      return ok;
    };
    double lo = 0, hi = 0.5;
    if (!feasible(hi, nullptr)) {
      for (int it = 0; it < 40; ++it) {
        double mid = (lo + hi) / 2;
        if (feasible(mid, nullptr))
          lo = mid;
        else
          hi = mid;
      }
    } else {
      lo = hi;
    }
    MixedGraph pruned = base;
    if (lo > 0 && feasible(lo, &pruned)) {
      res.tau = lo;
      res.mixed = std::move(pruned);
    } else {
      // fall back to the unpruned partition; certification will decide
      res.mixed = std::move(base);
      res.tau = double(min_extension_density(res.mixed).to_long_double());
    }
    certify(res);
    return res;
  }

  // regularity strategy (desk scale)
  RegularityConfig cfg;
  double nchoose2 = double(r + 1) * r / 2;  // binom(k+2, 2)
  cfg.epsilon = std::clamp(gamma * gamma / (9 * nchoose2), 0.05, 0.3);
  cfg.r = r;
  auto cylinders = cylinder_partition(g, parts, cfg, seed + 1);

  const Cylinder* best = nullptr;
  long double best_prod = -1;
  for (const auto& cyl : cylinders) {
    if (!cyl.regular) continue;
    bool nonempty = true;
    for (const auto& s : cyl.sets) nonempty &= !s.empty();
    if (!nonempty) continue;
    long double prod = 1;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) prod *= pair_density(g, cyl.sets[i], cyl.sets[j]);
    if (prod > best_prod) {
      best_prod = prod;
      best = &cyl;
    }
  }
  if (!best) fail(Errc::ReductionFailed, "no regular cylinder available");

  // index whose product of densities to the other sets is largest becomes C
  int c_index = r - 1;
  long double best_cprod = -1;
  for (int c = 0; c < r; ++c) {
    long double prod = 1;
    for (int j = 0; j < r; ++j)
      if (j != c) prod *= pair_density(g, best->sets[j], best->sets[c]);
    if (prod > best_cprod) {
      best_cprod = prod;
      c_index = c;
    }
  }
  res.mixed = build_mixed(best->sets, c_index);
  res.tau = double(0.4L * best_cprod);
  int cyl_min = g.n();
  for (const auto& s : best->sets) cyl_min = std::min(cyl_min, s.count());
  res.zeta = double(cyl_min) / (double(g.n()) / r);
  certify(res);
  if (!res.certified && res.mixed.system.edge_count() == 0)
    fail(Errc::ReductionFailed, "selected cylinder has no edges");
  return res;
}

}  // namespace blowup
