#pragma once

#include <cstdint>
#include <vector>

#include "blowup/system.hpp"

namespace blowup {

struct RegularityConfig {
  double epsilon = 0.25;  // in (0, 1/2)
  int r = 2;
  double beta_floor = 0;  // 0 -> epsilon^4
};

struct Cylinder {
  std::vector<VertexSet> sets;  // one W_i per part
  bool regular = false;
};

struct ReductionResult {
  MixedGraph mixed;
  double tau = 0;
  double zeta = 0;  // achieved min part-size fraction
  double gamma_in = 0;
  bool certified = false;
};

// Random r-partition whose part-aligned labeled K_r count reaches
// gamma * r! * prod |V_i| (gamma is the unlabeled clique density; the target
// equals labeled-density * prod |V_i|). Up to 200 resamples.
std::vector<VertexSet> random_spanning_partition(const Graph& g, int r, double gamma,
                                                 uint64_t seed);

struct RegularityOutcome {
  bool regular = true;   // "no witness found"; advisory above the exhaustive guard
  bool exhaustive = false;
  VertexSet wa, wb;      // verified witness when !regular
  double deviation = 0;
};

// Exhaustive over qualifying subset pairs when |a|+|b| <= 20; otherwise
// `budget` random subset pairs of sizes ceil(eps|a|) x ceil(eps|b|).
RegularityOutcome regularity_check(const Graph& g, const VertexSet& a, const VertexSet& b,
                                   double epsilon, int budget, uint64_t seed = 0);

// Refine the full product cylinder by splitting along regularity witnesses
// until the tuple mass in non-regular cylinders is <= epsilon or beta_floor
// would be violated.
std::vector<Cylinder> cylinder_partition(const Graph& g, const std::vector<VertexSet>& parts,
                                         const RegularityConfig& cfg, uint64_t seed = 0);

struct CountingBounds {
  long double lower = 0, upper = 0, actual = 0;
};

CountingBounds counting_lemma_check(const Graph& g, const std::vector<VertexSet>& sets,
                                    const Graph& pattern, double epsilon);

// Drop A-edges with fewer than tau*|C| extenders; output has tau_C >= tau or
// no A-edges. Only A-edges are touched.
MixedGraph prune_low_extension_edges(const MixedGraph& m, double tau);

enum class ReduceStrategy { pruning, regularity };

ReductionResult regularize_cliques(const Graph& g, int k, double gamma, ReduceStrategy strategy,
                                   uint64_t seed);

}  // namespace blowup
