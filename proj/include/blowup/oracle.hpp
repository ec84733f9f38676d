#pragma once

#include <optional>

#include "blowup/certificate.hpp"
#include "blowup/iterate.hpp"
#include "blowup/system.hpp"

namespace blowup {
namespace oracle {

struct BicliqueWitness {
  int t = 0;
  VertexSet x, y;
};

// Exact maximum balanced biclique order across (x, y); |x|+|y| <= 24.
BicliqueWitness max_biclique_bruteforce(const Graph& g, const VertexSet& x, const VertexSet& y);

// Exact maximum t with pattern[t] in g, via class-assignment backtracking.
// n <= 14 when the pattern is a triangle, n <= 12 otherwise. Optional parts
// restrict each class to the corresponding vertex set.
BlowupCertificate max_blowup_bruteforce(const Graph& g, const Graph& pattern,
                                        const std::vector<VertexSet>* parts = nullptr);

struct EnergyMaximizer {
  KPartiteSystem system;
  long double log2_e = 0;
};

// Exact global energy maximizer over subset tuples with the (min total size,
// lexicographic) tie-break; sum of part sizes <= 24. An edgeless input is
// returned unchanged with energy 0.
EnergyMaximizer max_energy_subsystem_bruteforce(const KPartiteSystem& s, double R);

// Exhaustive search over induced sub-tripartite systems with all parts >= m
// for an (m, mu)-switcher; |a|+|b|+|c| <= 18.
std::optional<SwitcherReport> find_switcher_bruteforce(const Graph& g, const VertexSet& a,
                                                       const VertexSet& b, const VertexSet& c,
                                                       int m, double mu);

}  // namespace oracle
}  // namespace blowup
