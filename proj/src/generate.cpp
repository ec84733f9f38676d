#include "blowup/generate.hpp"

#include <cmath>
#include <random>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

void check_prob(double p) {
  if (!(p >= 0 && p <= 1)) fail(Errc::BadParams, "probability must be in [0, 1]");
}

}  // namespace

Graph gen_gnp(int n, double p, uint64_t seed) {
  if (n < 0) fail(Errc::BadParams, "n must be nonnegative");
  check_prob(p);
  Graph g(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph gen_multipartite(const std::vector<int>& part_sizes, double p, uint64_t seed) {
  check_prob(p);
  int n = 0;
  for (int s : part_sizes) {
    if (s < 0) fail(Errc::BadParams, "part sizes must be nonnegative");
    n += s;
  }
  std::vector<int> part_of(n);
  int at = 0;
  for (size_t i = 0; i < part_sizes.size(); ++i)
    for (int j = 0; j < part_sizes[i]; ++j) part_of[at++] = int(i);
  Graph g(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v] && coin(rng)) g.add_edge(u, v);
  return g;
}

Graph gen_hard(int n, double gamma, uint64_t seed) {
  if (!(gamma > 0 && gamma <= 1)) fail(Errc::BadParams, "gamma must be in (0, 1]");
  double q = std::sqrt(gamma);
  int a = n / 3, b = n / 3;
  Graph g(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0, 1);
  auto part = [&](int v) { return v < a ? 0 : (v < a + b ? 1 : 2); };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int pu = part(u), pv = part(v);
      if (pu == pv) continue;
      double p = (pu == 0 && pv == 1) ? 0.5 : q;
      if (unif(rng) < p) g.add_edge(u, v);
    }
  return g;
}

}  // namespace blowup
