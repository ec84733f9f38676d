#include "blowup/iterate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "blowup/errors.hpp"
#include "blowup/kst.hpp"
#include "blowup/reduce.hpp"

namespace blowup {

namespace {

constexpr double kTol = 1e-9;

long double tau_c(const MixedGraph& m) { return min_extension_density(m).to_long_double(); }

long long extension_edges(const MixedGraph& m, int c) {
  const auto& s = m.system;
  if (s.k() == 2) {
    VertexSet a = m.g().neighbors(c) & s.parts[0];
    VertexSet b = m.g().neighbors(c) & s.parts[1];
    return m.g().edges_between(a, b);
  }
  long long e = 0;
  const Bitset& nb = m.g().neighbors(c);
  for (const auto& t : s.tuples) {
    bool in = true;
    for (int v : t)
      if (!nb.test(v)) { in = false; break; }
    if (in) ++e;
  }
  return e;
}

int min_part_size(const MixedGraph& m) {
  int n = m.c_part.count();
  for (const auto& p : m.system.parts) n = std::min(n, p.count());
  return n;
}

Graph induced(const Graph& g, const VertexSet& keep) {
  Graph out(g.n());
  for (int u = keep.first(); u >= 0; u = keep.next(u)) {
    Bitset nb = g.neighbors(u) & keep;
    for (int v = nb.next(u); v >= 0; v = nb.next(v)) out.add_edge(u, v);
  }
  return out;
}

MixedGraph make_mixed(GraphPtr g, std::vector<VertexSet> parts, VertexSet c) {
  MixedGraph m;
  if (parts.size() == 2) {
    m.system = KPartiteSystem::bipartite_view(g, parts[0], parts[1]);
  } else {
    m.system = KPartiteSystem::spanning_cliques(g, std::move(parts));
  }
  m.c_part = std::move(c);
  return m;
}

struct Snapshot {
  std::vector<VertexSet> parts;
  std::vector<int> c_taken;
};

// Desk-scale fallback when the planned step count degenerates to zero: take
// the best extension vertex repeatedly, keeping every intermediate state so a
// stopping point can be chosen afterwards.
std::vector<Snapshot> greedy_iterate(MixedGraph m, int max_steps) {
  std::vector<Snapshot> snaps;
  snaps.push_back({m.system.parts, {}});
  for (int step = 0; step < max_steps; ++step) {
    int best_c = -1;
    long long best_e = 0;
    for (int c = m.c_part.first(); c >= 0; c = m.c_part.next(c)) {
      long long e = extension_edges(m, c);
      if (e > best_e) { best_e = e; best_c = c; }
    }
    if (best_c < 0) break;
    KPartiteSystem next = restrict_to_extension(m, best_c);
    bool empty = false;
    for (const auto& p : next.parts) empty |= p.empty();
    if (empty) break;
    m.system = std::move(next);
    m.c_part.reset(best_c);
    Snapshot s = snaps.back();
    s.parts = m.system.parts;
    s.c_taken.push_back(best_c);
    snaps.push_back(std::move(s));
  }
  return snaps;
}

VertexSet take_first(const VertexSet& s, int t) {
  VertexSet out(s.universe());
  int taken = 0;
  for (int v = s.first(); v >= 0 && taken < t; v = s.next(v), ++taken) out.set(v);
  return out;
}

// Build a verified K_3[t] from daggers: C-vertices complete to A u B plus a
// biclique inside (A, B). Returns a degenerate certificate when t = 0.
BlowupCertificate assemble_triangle(const Graph& g, const VertexSet& a, const VertexSet& b,
                                    const std::vector<int>& c_taken, RunTrace* trace) {
  Graph k3 = complete_graph(3);
  int s = int(c_taken.size());
  if (s == 0 || a.empty() || b.empty()) return BlowupCertificate::empty(k3, g.n());
  long double d = (long double)g.edges_between(a, b) / ((long double)a.count() * b.count());
  if (d <= 0) return BlowupCertificate::empty(k3, g.n());
  double p = std::min(0.5L, d);
  BlowupCertificate bic = extract_biclique(g, a, b, p);
  int t = std::min(s, bic.t);
  if (trace) {
    trace->s_side = s;
    trace->kst_t = bic.t;
    std::ostringstream os;
    os << "k_stt s=" << s << " t=" << bic.t;
    if (!trace->note.empty()) trace->note += "; ";
    trace->note += os.str();
  }
  if (t == 0) return BlowupCertificate::empty(k3, g.n());
  BlowupCertificate cert;
  cert.pattern = k3;
  cert.classes = {VertexSet::from_vector(g.n(), {c_taken.begin(), c_taken.begin() + t}),
                  take_first(bic.classes[0], t), take_first(bic.classes[1], t)};
  cert.t = t;
  if (!verify_blowup(g, cert)) fail(Errc::PreconditionFailed, "assembled triangle blowup failed verification");
  return cert;
}

// Greedy tripartite run + stopping-point selection by min(steps, biclique).
BlowupCertificate greedy_triangle(const Graph& g, GraphPtr gp, const VertexSet& a,
                                  const VertexSet& b, const VertexSet& c, RunTrace* trace) {
  MixedGraph m = make_mixed(gp, {a, b}, c);
  auto snaps = greedy_iterate(std::move(m), c.count());
  int best_i = 0, best_score = 0;
  for (size_t i = 1; i < snaps.size(); ++i) {
    int tb = greedy_biclique_order(g, snaps[i].parts[0], snaps[i].parts[1]);
    int score = std::min(int(i), tb);
    if (score > best_score) { best_score = score; best_i = int(i); }
  }
  const Snapshot& s = snaps[best_i];
  return assemble_triangle(g, s.parts[0], s.parts[1], s.c_taken, trace);
}

SwitcherReport make_report(const Graph& g, const VertexSet& x, const VertexSet& y,
                           const VertexSet& z, int m, double mu) {
  SwitcherReport r;
  r.x = x;
  r.y = y;
  r.z = z;
  r.m = m;
  r.mu = mu;
  long long tri = count_triangles_spanning(g, x, y, z);
  r.kappa3 = double(tri) / (double(x.count()) * y.count() * z.count());
  long long e = g.edges_between(x, y);
  r.dxy = double(e) / (double(x.count()) * y.count());
  return r;
}

}  // namespace

IterationPlan plan_basic(int k, double tau0, double p, double log2_n) {
  if (!(tau0 > 0 && tau0 <= 0.5 && p > 0 && p <= 0.5))
    fail(Errc::BadParams, "plan_basic requires tau0, p in (0, 1/2]");
  IterationPlan plan;
  plan.k = k;
  plan.tau0 = tau0;
  plan.p = p;
  plan.log2_n = log2_n;
  double log_inv_p = std::log2(1.0 / p);
  plan.R = log2_n / (4.0 * log_inv_p);
  plan.steps = int(std::floor(tau0 * log2_n / (std::exp2(k + 5) * log_inv_p) + kTol));
  plan.threshold_ok = log2_n + kTol >= std::pow(10.0, k) / tau0 * log_inv_p;
  return plan;
}

IterationPlan plan_switch(double tau0, double p0, double log2_n) {
  if (!(tau0 > 0 && tau0 <= 0.5 && p0 > 0 && p0 <= 0.5))
    fail(Errc::BadParams, "plan_switch requires tau0, p0 in (0, 1/2]");
  IterationPlan plan;
  plan.k = 2;
  plan.tau0 = tau0;
  plan.p = p0;
  plan.log2_n = log2_n;
  double lp = std::log2(1.0 / p0), lt = std::log2(1.0 / tau0);
  plan.R = log2_n / (4.0 * lp);
  plan.steps = int(std::floor(std::sqrt(p0 * tau0) * log2_n / (320.0 * lp * lt) + kTol));
  plan.threshold_ok = log2_n + kTol >= 400.0 / tau0 * lp;
  return plan;
}

std::pair<int, int> switcher_solve_orders(double nu, double kappa, double log2_m) {
  if (!(nu > 0 && nu <= 0.5 && kappa > 0 && kappa <= 0.5))
    fail(Errc::BadParams, "switcher orders require nu, kappa in (0, 1/2]");
  double lk = std::log2(1.0 / kappa);
  int s = int(std::floor(nu * log2_m / (512.0 * lk) + kTol));
  int t = int(std::floor(log2_m / (12.0 * lk) + kTol));
  return {s, t};
}

OneStepResult one_step(const MixedGraph& m, double tau, double R, ExtractionMode mode) {
  const int k = m.k();
  if (tau_c(m) < tau - kTol) fail(Errc::PreconditionFailed, "tau_C below tau");
  if (R < std::exp2(k + 1) / tau - kTol) fail(Errc::PreconditionFailed, "R below 2^{k+1}/tau");
  if (mode == ExtractionMode::exact) {
    int total = 0;
    for (const auto& p : m.system.parts) total += p.count();
    if (total <= kExhaustiveSumLimit && !is_strictly_balanced(m.system, R))
      fail(Errc::PreconditionFailed, "system not strictly balanced");
  }

  int best_c = -1;
  long long best_e = 0;
  for (int c = m.c_part.first(); c >= 0; c = m.c_part.next(c)) {
    long long e = extension_edges(m, c);
    if (e > best_e) { best_e = e; best_c = c; }
  }
  if (best_c < 0) fail(Errc::NoExtensions, "no vertex of C extends any edge");

  OneStepResult out;
  out.c_star = best_c;
  out.system = extract_strictly_balanced(restrict_to_extension(m, best_c), R, mode);
  return out;
}

IterationResult basic_iteration(const MixedGraph& m, double tau0, double p,
                                ExtractionMode mode) {
  const int k = m.k();
  if (tau_c(m) < tau0 - kTol) fail(Errc::PreconditionFailed, "tau_C below tau0");
  if (kpartite_density(m.system).to_long_double() < p - kTol)
    fail(Errc::PreconditionFailed, "density below p");
  int n = min_part_size(m);
  if (n == 0) fail(Errc::EmptyPart, "empty part");

  IterationPlan plan = plan_basic(k, tau0, p, std::log2(double(n)));
  if (plan.steps == 0) fail(Errc::Degenerate, "basic iteration plan has zero steps");

  IterationResult res;
  MixedGraph cur = m;
  cur.system = extract_strictly_balanced(cur.system, plan.R, mode).system;
  std::vector<int> taken;
  long double base_log = 0;
  for (const auto& q : m.system.parts) base_log += std::log2((long double)q.count());
  base_log += plan.R * std::log2((long double)p);

  for (int step = 0; step < plan.steps; ++step) {
    try {
      OneStepResult one = one_step(cur, tau0 / 2, plan.R, mode);
      cur.system = one.system.system;
      cur.c_part.reset(one.c_star);
      taken.push_back(one.c_star);

      StepRecord rec;
      rec.step = step + 1;
      rec.c_star = one.c_star;
      for (const auto& q : cur.system.parts) rec.part_sizes.push_back(q.count());
      rec.density = kpartite_density(cur.system).to_double();
      rec.log2_e = log2_energy(cur.system, plan.R);
      rec.balanced_exact = one.system.certified == BalanceCertificate::exact;
      long double needed = base_log - std::exp2(k + 3) * (step + 1) / tau0;
      rec.advisory_ok = rec.log2_e >= needed - 1e-9L * std::max(1.0L, std::fabs(needed));
      if (plan.threshold_ok && !rec.advisory_ok)
        fail(Errc::PreconditionFailed, "energy invariant violated above threshold");
      res.trace.steps.push_back(std::move(rec));
    } catch (const Error& e) {
      res.partial = true;
      res.trace.partial = true;
      res.trace.note = std::string("stopped at step ") + std::to_string(step) + ": " + e.what();
      break;
    }
  }
  res.parts_dagger = cur.system.parts;
  res.c_dagger = VertexSet::from_vector(m.g().n(), taken);
  return res;
}

bool is_switcher(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& z,
                 int m, double mu) {
  long long nx = x.count(), ny = y.count(), nz = z.count();
  if (nx == 0 || ny == 0 || nz == 0) fail(Errc::EmptyPart, "switcher parts must be nonempty");
  if (std::min({nx, ny, nz}) < m) return false;
  long long tri = count_triangles_spanning(g, x, y, z);
  long double k3 = (long double)tri / ((long double)nx * ny * nz);
  long double slack = 1 - 1e-12L;
  if (k3 < (long double)mu * mu * slack) return false;
  long long e = g.edges_between(x, y);
  if (mu <= 0) return true;
  if (e == 0) return false;  // d = 0, ratio condition unsatisfiable for mu > 0
  // kappa3 / d(x,y) = tri / (e * |z|)
  return (long double)tri >= (long double)mu * e * nz * slack;
}

SwitchStepResult one_step_switching(const Graph& g, const VertexSet& a, const VertexSet& b,
                                    const VertexSet& c, double tau, double R, int m,
                                    ExtractionMode mode) {
  if (!(tau > 0 && tau <= 0.5)) fail(Errc::BadParams, "tau must be in (0, 1/2]");
  if (m < 1) fail(Errc::BadParams, "m must be positive");
  long long na = a.count(), nb = b.count(), nc = c.count();
  if (na == 0 || nb == 0 || nc == 0) fail(Errc::EmptyPart, "empty part");
  GraphPtr gp = std::make_shared<Graph>(g);
  MixedGraph mg = make_mixed(gp, {a, b}, c);
  if (tau_c(mg) < tau - kTol) fail(Errc::PreconditionFailed, "tau_C below tau");
  if (R < 50.0 / tau - kTol) fail(Errc::PreconditionFailed, "R below 50/tau");
  if (m > tau / 4 * std::min({na, nb, nc}) + kTol)
    fail(Errc::PreconditionFailed, "m above (tau/4) * min part");
  if (mode == ExtractionMode::exact) {
    int total = int(na + nb);
    if (total <= kExhaustiveSumLimit &&
        !is_strictly_balanced(KPartiteSystem::bipartite_view(gp, a, b), R))
      fail(Errc::PreconditionFailed, "(A,B) not strictly balanced");
  }

  long long e_ab = g.edges_between(a, b);
  long double p = (long double)e_ab / ((long double)na * nb);
  long long tri_total = count_triangles_spanning(g, a, b, c);
  long double kappa = (long double)tri_total / ((long double)na * nb * nc);
  double mu = std::sqrt(double(p) * tau) / 4;

  SwitchStepResult out;
  if (p <= 16 * tau + kTol && is_switcher(g, a, b, c, m, mu)) {
    out.switcher_found = true;
    out.report = make_report(g, a, b, c, m, mu);
    return out;
  }

  // C_0: vertices in at most kappa|A||B|/4 triangles; C_A / C_B: non-C_0
  // vertices with sparse neighborhood on one side.
  long double c0_cut = kappa * na * nb / 4;
  VertexSet c0(g.n()), ca(g.n()), cb(g.n());
  std::vector<long long> tri_of(g.n(), 0);
  for (int v = c.first(); v >= 0; v = c.next(v)) {
    VertexSet xa = g.neighbors(v) & a;
    VertexSet xb = g.neighbors(v) & b;
    tri_of[v] = g.edges_between(xa, xb);
    if ((long double)tri_of[v] <= c0_cut) {
      c0.set(v);
    } else {
      if (xa.count() <= mu * na) ca.set(v);
      if (xb.count() <= mu * nb) cb.set(v);
    }
  }
  if (ca.count() >= m && is_switcher(g, a, ca, b, m, mu)) {
    out.switcher_found = true;
    out.report = make_report(g, a, ca, b, m, mu);
    return out;
  }
  if (cb.count() >= m && is_switcher(g, b, cb, a, m, mu)) {
    out.switcher_found = true;
    out.report = make_report(g, b, cb, a, m, mu);
    return out;
  }

  int best_c = -1;
  long long best_e = -1;
  for (int v = c.first(); v >= 0; v = c.next(v)) {
    if (c0.test(v) || ca.test(v) || cb.test(v)) continue;
    if (tri_of[v] > best_e) { best_e = tri_of[v]; best_c = v; }
  }
  if (best_c < 0) fail(Errc::PreconditionFailed, "no eligible extension vertex remains");

  VertexSet a_plus = g.neighbors(best_c) & a;
  VertexSet b_plus = g.neighbors(best_c) & b;
  out.c_star = best_c;
  out.system = extract_strictly_balanced(KPartiteSystem::bipartite_view(gp, a_plus, b_plus), R, mode);
  return out;
}

SwitchIterationResult switch_iteration(const Graph& g, const VertexSet& a, const VertexSet& b,
                                       const VertexSet& c, double tau0, double p0,
                                       ExtractionMode mode) {
  if (!(tau0 > 0 && tau0 <= 0.5 && p0 > 0 && p0 <= 0.5))
    fail(Errc::BadParams, "tau0, p0 must be in (0, 1/2]");
  long long na = a.count(), nb = b.count(), nc = c.count();
  if (na == 0 || nb == 0 || nc == 0) fail(Errc::EmptyPart, "empty part");
  GraphPtr gp = std::make_shared<Graph>(g);
  MixedGraph mg = make_mixed(gp, {a, b}, c);
  if (tau_c(mg) < tau0 - kTol) fail(Errc::PreconditionFailed, "tau_C below tau0");
  long double d_ab = (long double)g.edges_between(a, b) / ((long double)na * nb);
  if (d_ab < p0 - kTol) fail(Errc::PreconditionFailed, "d(A,B) below p0");

  long long n = std::min({na, nb, nc});
  int m = std::max(1, int(std::cbrt(double(n))));
  double mu0 = std::sqrt(p0 * tau0) / 8;

  SwitchIterationResult res;
  // Cheap detections first so the dichotomy survives degenerate plans.
  if (is_switcher(g, a, b, c, m, mu0)) {
    res.switcher_found = true;
    res.report = make_report(g, a, b, c, m, mu0);
    return res;
  }

  IterationPlan plan = plan_switch(tau0, p0, std::log2(double(n)));
  if (plan.steps == 0) {
    // Last cheap shot: the sparse-set construction of the one-step lemma.
    try {
      SwitchStepResult step = one_step_switching(g, a, b, c, tau0 / 2,
                                                 std::max(plan.R, 100.0 / tau0), m, mode);
      if (step.switcher_found) {
        res.switcher_found = true;
        res.report = step.report;
        return res;
      }
    } catch (const Error&) {
      // fall through to Degenerate
    }
    fail(Errc::Degenerate, "switch iteration plan has zero steps");
  }

  VertexSet cur_a = a, cur_b = b, cur_c = c;
  {
    auto bal = extract_strictly_balanced(KPartiteSystem::bipartite_view(gp, a, b), plan.R, mode);
    cur_a = bal.system.parts[0];
    cur_b = bal.system.parts[1];
  }
  std::vector<int> taken;
  long double base_log = std::log2((long double)na) + std::log2((long double)nb) +
                         plan.R * std::log2((long double)p0);
  double kappa0 = p0 * tau0 / 4;

  for (int step = 0; step < plan.steps; ++step) {
    try {
      SwitchStepResult one = one_step_switching(g, cur_a, cur_b, cur_c, tau0 / 2, plan.R, m, mode);
      if (one.switcher_found) {
        res.switcher_found = true;
        res.report = one.report;
        res.trace.note = "switcher at step " + std::to_string(step);
        return res;
      }
      cur_a = one.system.system.parts[0];
      cur_b = one.system.system.parts[1];
      cur_c.reset(one.c_star);
      taken.push_back(one.c_star);

      StepRecord rec;
      rec.step = step + 1;
      rec.c_star = one.c_star;
      rec.part_sizes = {cur_a.count(), cur_b.count()};
      long long e = g.edges_between(cur_a, cur_b);
      rec.density = double(e) / (double(cur_a.count()) * cur_b.count());
      rec.log2_e = log2_energy((long long)cur_a.count() * cur_b.count(), e, plan.R);
      rec.balanced_exact = one.system.certified == BalanceCertificate::exact;
      long double needed =
          base_log + 40.0L * (step + 1) / std::sqrt((long double)kappa0) * std::log2((long double)tau0);
      rec.advisory_ok = rec.log2_e >= needed - 1e-9L * std::max(1.0L, std::fabs(needed));
      if (plan.threshold_ok && !rec.advisory_ok)
        fail(Errc::PreconditionFailed, "energy invariant violated above threshold");
      res.trace.steps.push_back(std::move(rec));
    } catch (const Error& e) {
      res.partial = true;
      res.trace.partial = true;
      res.trace.note = std::string("stopped at step ") + std::to_string(step) + ": " + e.what();
      break;
    }
  }
  res.a_dagger = cur_a;
  res.b_dagger = cur_b;
  res.c_dagger = VertexSet::from_vector(g.n(), taken);
  return res;
}

BlowupCertificate switcher_solve(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const VertexSet& c, double kappa, double nu) {
  if (!(kappa > 0 && kappa <= 0.5 && nu > 0 && nu <= 0.5))
    fail(Errc::BadParams, "switcher_solve requires kappa, nu in (0, 1/2]");
  long long na = a.count(), nb = b.count(), nc = c.count();
  if (na == 0 || nb == 0 || nc == 0) fail(Errc::EmptyPart, "empty part");
  long long tri = count_triangles_spanning(g, a, b, c);
  long double k3 = (long double)tri / ((long double)na * nb * nc);
  if (k3 < kappa * (1 - 1e-12L)) fail(Errc::PreconditionFailed, "triangle density below kappa");
  long long e_ab = g.edges_between(a, b);
  if (e_ab > 0 && (long double)tri < (long double)nu * e_ab * nc * (1 - 1e-12L))
    fail(Errc::PreconditionFailed, "kappa3/d(A,B) below nu");

  GraphPtr gp = std::make_shared<Graph>(g);
  MixedGraph mg = make_mixed(gp, {a, b}, c);
  MixedGraph pruned = prune_low_extension_edges(mg, nu / 2);
  if (pruned.system.edge_count() == 0)
    fail(Errc::PreconditionFailed, "no A-B edges survive the triangle filter");

  double p = std::min(0.5, kappa * kappa);
  RunTrace trace;
  try {
    IterationResult it = basic_iteration(pruned, nu / 2, p, ExtractionMode::heuristic);
    BlowupCertificate cert = assemble_triangle(*pruned.system.host, it.parts_dagger[0],
                                               it.parts_dagger[1], it.c_dagger.to_vector(), &trace);
    if (cert.t > 0) return cert;
  } catch (const Error&) {
    // desk scale: fall back to the greedy run below
  }
  return greedy_triangle(*pruned.system.host, pruned.system.host, pruned.system.parts[0],
                         pruned.system.parts[1], pruned.c_part, &trace);
}

BlowupCertificate find_triangle_blowup(const Graph& g, double gamma, uint64_t seed,
                                       RunTrace* trace) {
  const double n3 = std::pow(double(g.n()), 3);
  long long labeled = count_labeled_copies(g, complete_graph(3));
  if ((double)labeled + kTol < gamma * n3)
    fail(Errc::NotEnoughCliques, "fewer labeled triangles than gamma * N^3");
  if (labeled == 0) fail(Errc::NotEnoughCliques, "graph is triangle-free");

  ReductionResult red = regularize_cliques(g, 2, double(labeled) / n3 / 6.0,
                                           ReduceStrategy::pruning, seed);
  const Graph& host = *red.mixed.system.host;
  const VertexSet& a = red.mixed.system.parts[0];
  const VertexSet& b = red.mixed.system.parts[1];
  const VertexSet& c = red.mixed.c_part;

  double tau0 = std::min(0.5, std::max(red.tau, 1e-6));
  long double d_ab = (long double)host.edges_between(a, b) / ((long double)a.count() * b.count());
  double p0 = std::min(0.5, std::max(double(d_ab), 1e-6));

  BlowupCertificate cert = BlowupCertificate::empty(complete_graph(3), g.n());
  SwitchIterationResult sw;
  bool have_sw = false;
  try {
    sw = switch_iteration(host, a, b, c, tau0, p0);
    have_sw = true;
  } catch (const Error&) {
    have_sw = false;
  }

  if (have_sw && sw.switcher_found) {
    const SwitcherReport& r = sw.report;
    // The proof's parameters, clamped to what the found switcher certifies.
    double kap = std::min({0.5, gamma / 256, r.kappa3});
    double nu = std::min({0.5, std::sqrt(gamma) / 16, r.dxy > 0 ? r.kappa3 / r.dxy : 0.5});
    kap = std::max(kap, 1e-9);
    nu = std::max(nu, 1e-9);
    cert = switcher_solve(host, r.x, r.y, r.z, kap, nu);
    if (trace) trace->note = "switcher branch";
  } else if (have_sw) {
    if (trace) *trace = sw.trace;
    cert = assemble_triangle(host, sw.a_dagger, sw.b_dagger, sw.c_dagger.to_vector(), trace);
    if (trace) trace->note += "; dagger branch";
  }

  if (cert.t == 0) {
    // Desk-scale fallback: greedy iteration on the reduced tripartition.
    cert = greedy_triangle(host, red.mixed.system.host, a, b, c, trace);
    if (trace) trace->note += "; greedy fallback";
  }
  if (cert.t == 0) fail(Errc::Degenerate, "no triangle blowup of positive order found");
  if (!verify_blowup(g, cert)) fail(Errc::PreconditionFailed, "certificate failed verification");
  return cert;
}

BlowupCertificate find_clique_blowup(const Graph& g, int k_plus_1, double gamma, uint64_t seed,
                                     RunTrace* trace) {
  if (k_plus_1 < 3) fail(Errc::BadParams, "k_plus_1 must be at least 3");
  if (k_plus_1 == 3) return find_triangle_blowup(g, gamma, seed, trace);
  const int k = k_plus_1 - 1;
  const double nk1 = std::pow(double(g.n()), k_plus_1);
  long long labeled = count_labeled_copies(g, complete_graph(k_plus_1));
  if ((double)labeled + kTol < gamma * nk1)
    fail(Errc::NotEnoughCliques, "fewer labeled cliques than gamma * N^{k+1}");
  if (labeled == 0) fail(Errc::NotEnoughCliques, "no K_{k+1} copies");

  double fact = 1;
  for (int i = 2; i <= k_plus_1; ++i) fact *= i;
  ReductionResult red = regularize_cliques(g, k, double(labeled) / nk1 / fact,
                                           ReduceStrategy::pruning, seed);
  const Graph& host = *red.mixed.system.host;

  // Iterate, preferring the principled path, else greedy snapshots.
  std::vector<Snapshot> snaps;
  try {
    IterationResult it = basic_iteration(red.mixed, std::min(0.5, std::max(red.tau, 1e-6)),
                                         std::min(0.5, std::max(
                                             kpartite_density(red.mixed.system).to_double(), 1e-6)),
                                         ExtractionMode::heuristic);
    snaps.push_back({it.parts_dagger, it.c_dagger.to_vector()});
  } catch (const Error&) {
    snaps = greedy_iterate(red.mixed, red.mixed.c_part.count());
  }

  int best_i = -1, best_score = 0;
  for (size_t i = 0; i < snaps.size(); ++i) {
    int steps = int(snaps[i].c_taken.size());
    int minp = host.n();
    for (const auto& q : snaps[i].parts) minp = std::min(minp, q.count());
    int score = std::min(steps, int(std::log2(std::max(minp, 1))));
    if (score > best_score || best_i < 0) { best_score = score; best_i = int(i); }
  }
  const Snapshot& snap = snaps[best_i];
  if (snap.c_taken.empty()) fail(Errc::Degenerate, "no extension steps possible");

  // Random downsample of the parts, keeping at least half the spanning-clique
  // density in expectation (resample up to 100 times).
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  int minp = host.n();
  for (const auto& q : snap.parts) minp = std::min(minp, q.count());
  int down = std::min(minp, std::max(int(std::pow(double(g.n()), 0.25)), 12));
  long double full_density = 0;
  {
    long long cl = count_spanning_cliques(host, snap.parts);
    long double prod = 1;
    for (const auto& q : snap.parts) prod *= q.count();
    full_density = prod > 0 ? cl / prod : 0;
  }
  std::vector<VertexSet> picked = snap.parts;
  bool density_ok = false;
  for (int attempt = 0; attempt < 100 && !density_ok; ++attempt) {
    std::vector<VertexSet> cand;
    for (const auto& q : snap.parts) {
      auto ids = q.to_vector();
      std::shuffle(ids.begin(), ids.end(), rng);
      ids.resize(down);
      cand.push_back(VertexSet::from_vector(host.n(), ids));
    }
    long long cl = count_spanning_cliques(host, cand);
    long double prod = std::pow((long double)down, k);
    if (cl > 0 && cl / prod >= full_density / 2) {
      picked = std::move(cand);
      density_ok = true;
    }
  }
  if (!density_ok && trace) trace->note += "downsample density target missed; ";

  VertexSet keep(host.n());
  for (const auto& q : picked) keep |= q;
  Graph sub = induced(host, keep);
  long long sub_labeled = count_labeled_copies(sub, complete_graph(k));
  if (sub_labeled == 0) fail(Errc::Degenerate, "downsampled parts lost all K_k copies");
  double sub_gamma = double(sub_labeled) / std::pow(double(host.n()), k);

  BlowupCertificate inner = find_clique_blowup(sub, k, sub_gamma, seed + 1, trace);
  int t = std::min(inner.t, int(snap.c_taken.size()));
  if (t == 0) fail(Errc::Degenerate, "inner recursion returned order zero");

  BlowupCertificate cert;
  cert.pattern = complete_graph(k_plus_1);
  cert.classes.push_back(
      VertexSet::from_vector(g.n(), {snap.c_taken.begin(), snap.c_taken.begin() + t}));
  for (const auto& cls : inner.classes) cert.classes.push_back(take_first(cls, t));
  cert.t = t;
  if (!verify_blowup(g, cert)) fail(Errc::PreconditionFailed, "clique blowup failed verification");
  return cert;
}

BlowupCertificate find_h_blowup(const Graph& g, const Graph& h_pattern, double gamma,
                                uint64_t seed, RunTrace* trace) {
  const int h = h_pattern.n();
  if (h < 2) fail(Errc::BadParams, "pattern needs at least 2 vertices");
  const double nh = std::pow(double(g.n()), h);
  long long labeled = count_labeled_copies(g, h_pattern);
  if ((double)labeled + kTol < gamma * nh)
    fail(Errc::NotEnoughCliques, "fewer labeled pattern copies than gamma * N^h");
  if (labeled == 0) fail(Errc::NotEnoughCliques, "pattern does not occur");

  if (h_pattern.edge_count() == 0) {
    // Edgeless pattern: any disjoint classes work.
    BlowupCertificate cert;
    cert.pattern = h_pattern;
    cert.t = g.n() / h;
    for (int i = 0; i < h; ++i) {
      VertexSet cls(g.n());
      for (int v = i * cert.t; v < (i + 1) * cert.t; ++v) cls.set(v);
      cert.classes.push_back(cls);
    }
    return cert;
  }

  double gamma_prime = std::pow(double(h), -h) * gamma;
  double target = gamma_prime * nh;
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> parts;
  bool ok = false;
  for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
    parts.assign(h, VertexSet(g.n()));
    for (int v = 0; v < g.n(); ++v) parts[rng() % h].set(v);
    bool nonempty = true;
    for (const auto& p : parts) nonempty &= !p.empty();
    if (!nonempty) continue;
    if ((double)count_aligned_copies(g, h_pattern, parts) + kTol >= target) ok = true;
  }
  if (!ok) fail(Errc::RetriesExhausted, "no partition reached the aligned-copy target");

  if (h == 2) {
    long long e = g.edges_between(parts[0], parts[1]);
    long double d = (long double)e / ((long double)parts[0].count() * parts[1].count());
    if (d <= 0) fail(Errc::NotEnoughCliques, "no edges across the bipartition");
    BlowupCertificate bic = extract_biclique(g, parts[0], parts[1], std::min(0.5L, d));
    bic.pattern = h_pattern;
    if (bic.t == 0) fail(Errc::Degenerate, "no biclique of positive order");
    if (!verify_blowup(g, bic)) fail(Errc::PreconditionFailed, "biclique failed verification");
    return bic;
  }

  // Auxiliary graph: parts independent, non-pattern pairs completed, pattern
  // pairs keep the original edges.
  Graph aux(g.n());
  std::vector<int> part_of(g.n(), -1);
  for (int i = 0; i < h; ++i)
    for (int v = parts[i].first(); v >= 0; v = parts[i].next(v)) part_of[v] = i;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      int pu = part_of[u], pv = part_of[v];
      if (pu == pv) continue;
      if (h_pattern.has_edge(pu, pv)) {
        if (g.has_edge(u, v)) aux.add_edge(u, v);
      } else {
        aux.add_edge(u, v);
      }
    }
  }

  BlowupCertificate clique_cert = find_clique_blowup(aux, h, gamma_prime, seed + 1, trace);
  if (clique_cert.t == 0) fail(Errc::Degenerate, "clique recursion returned order zero");

  // Each class lies inside a single part; map it back to that pattern vertex.
  BlowupCertificate cert;
  cert.pattern = h_pattern;
  cert.classes.assign(h, VertexSet(g.n()));
  cert.t = clique_cert.t;
  for (const auto& cls : clique_cert.classes) {
    int rep = cls.first();
    int pi = part_of[rep];
    if (pi < 0 || !cls.is_subset_of(parts[pi]))
      fail(Errc::PreconditionFailed, "blowup class straddles parts");
    cert.classes[pi] = cls;
  }
  if (!verify_blowup(g, cert)) fail(Errc::PreconditionFailed, "pattern blowup failed verification");
  if (trace) trace->note += "; gamma_prime=" + std::to_string(gamma_prime);
  return cert;
}

}  // namespace blowup
