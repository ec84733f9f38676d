#pragma once

#include <optional>

#include "blowup/system.hpp"

namespace blowup {

struct EnergyParams {
  double R = 2.0;
  std::optional<double> eta;
};

// Energy comparisons happen in log2 space at this tolerance; ties within it
// are resolved by the (sum of part sizes, lexicographic) order.
inline constexpr long double kEnergyLogTol = 1e-12L;

// log2 of prod |A_i| * d^R; -inf (represented far below any real value) for
// an edgeless or empty system.
long double log2_energy(long long size_product, long long edges, double R);
long double log2_energy(const KPartiteSystem& s, double R);
double energy(const KPartiteSystem& s, double R);

// Subset enumeration guard for the exact routines.
inline constexpr int kExhaustiveSumLimit = 24;

bool is_strictly_balanced(const KPartiteSystem& s, double R);

enum class BalanceCertificate { exact, heuristic };
enum class ExtractionMode { exact, heuristic };

struct BalancedSystem {
  KPartiteSystem system;
  double R = 0;
  BalanceCertificate certified = BalanceCertificate::heuristic;
};

BalancedSystem extract_strictly_balanced(const KPartiteSystem& s, double R, ExtractionMode mode);

struct EdgeBounds {
  long double bound_a = 0;
  std::optional<long double> bound_b;
};

// Right-hand sides of the balanced edge-count bounds; callers assert
// e(X) <= bound. bound_b is present only when its eta preconditions hold.
EdgeBounds balanced_edge_bound(const BalancedSystem& b, const std::vector<VertexSet>& subsets,
                               std::optional<double> eta);

bool bernoulli_check(double y, double R);
bool stronger_bernoulli_check(double y, double R, double eta);

// Shared tie-break: smaller total size first, then lexicographically smaller
// part-by-part vertex lists.
bool subset_tuple_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b);

}  // namespace blowup
