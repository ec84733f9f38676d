#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blowup/certificate.hpp"
#include "blowup/energy.hpp"
#include "blowup/system.hpp"

namespace blowup {

// Step counts and the energy exponent for an iteration run. n is carried in
// log2 form so the worked-value arithmetic holds far beyond 2^63.
struct IterationPlan {
  int k = 2;
  double tau0 = 0;
  double p = 0;
  double log2_n = 0;
  double R = 0;
  int steps = 0;
  bool threshold_ok = false;  // the size threshold the quantitative bounds need
};

IterationPlan plan_basic(int k, double tau0, double p, double log2_n);
IterationPlan plan_switch(double tau0, double p0, double log2_n);

struct StepRecord {
  int step = 0;
  int c_star = -1;
  std::vector<int> part_sizes;
  double density = 0;
  long double log2_e = 0;
  bool balanced_exact = false;
  bool advisory_ok = true;  // per-step quantitative checks below threshold
};

struct RunTrace {
  std::vector<StepRecord> steps;
  bool partial = false;
  std::string note;
  int s_side = 0;  // C-side order of the assembled K_{s,t,t}, when applicable
  int kst_t = 0;   // biclique order extracted, when applicable
};

struct OneStepResult {
  int c_star = -1;
  BalancedSystem system;
};

// Pick the C-vertex whose extension system has the most edges (smallest id on
// ties), restrict the parts to its neighborhoods, re-balance.
OneStepResult one_step(const MixedGraph& m, double tau, double R, ExtractionMode mode);

struct IterationResult {
  std::vector<VertexSet> parts_dagger;
  VertexSet c_dagger;
  RunTrace trace;
  bool partial = false;
};

IterationResult basic_iteration(const MixedGraph& m, double tau0, double p,
                                ExtractionMode mode = ExtractionMode::heuristic);

struct SwitcherReport {
  VertexSet x, y, z;
  int m = 0;
  double mu = 0;
  double kappa3 = 0;  // spanning triangle density of (x, y, z)
  double dxy = 0;
};

// min part >= m, triangle density >= mu^2, triangle density >= mu * d(x, y);
// monotone in both parameters.
bool is_switcher(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& z,
                 int m, double mu);

struct SwitchStepResult {
  bool switcher_found = false;
  SwitcherReport report;       // valid when switcher_found
  int c_star = -1;             // valid otherwise
  BalancedSystem system;       // (A*, B*)
};

SwitchStepResult one_step_switching(const Graph& g, const VertexSet& a, const VertexSet& b,
                                    const VertexSet& c, double tau, double R, int m,
                                    ExtractionMode mode = ExtractionMode::heuristic);

struct SwitchIterationResult {
  bool switcher_found = false;
  SwitcherReport report;
  VertexSet a_dagger, b_dagger, c_dagger;
  RunTrace trace;
  bool partial = false;
};

SwitchIterationResult switch_iteration(const Graph& g, const VertexSet& a, const VertexSet& b,
                                       const VertexSet& c, double tau0, double p0,
                                       ExtractionMode mode = ExtractionMode::heuristic);

// Orders of the K_{s,t,t} guaranteed for a switcher with triangle density
// >= kappa and ratio >= nu on parts of size >= m = 2^log2_m.
std::pair<int, int> switcher_solve_orders(double nu, double kappa, double log2_m);

// Filter low-triangle (A,B)-edges, iterate, extract a biclique, and assemble
// a verified K_{s,t,t} certificate (pattern K_3 classes truncated to balance
// by the caller if needed; here pattern is the triangle, order min(s, t)).
BlowupCertificate switcher_solve(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const VertexSet& c, double kappa, double nu);

BlowupCertificate find_triangle_blowup(const Graph& g, double gamma, uint64_t seed,
                                       RunTrace* trace = nullptr);
BlowupCertificate find_clique_blowup(const Graph& g, int k_plus_1, double gamma, uint64_t seed,
                                     RunTrace* trace = nullptr);
BlowupCertificate find_h_blowup(const Graph& g, const Graph& h_pattern, double gamma,
                                uint64_t seed, RunTrace* trace = nullptr);

}  // namespace blowup
