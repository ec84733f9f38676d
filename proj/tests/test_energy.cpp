#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <random>

#include "blowup/energy.hpp"
#include "blowup/errors.hpp"
#include "blowup/graph.hpp"
#include "blowup/oracle.hpp"

using namespace blowup;

namespace {

VertexSet vs(int n, const std::vector<int>& ids) { return VertexSet::from_vector(n, ids); }

KPartiteSystem pair_system(GraphPtr g, const std::vector<int>& a, const std::vector<int>& b) {
  return KPartiteSystem::bipartite_view(g, vs(g->n(), a), vs(g->n(), b));
}

// 2x2 pair on {a1,a2} x {b1,b2} with edges a1b1, a1b2, a2b1.
KPartiteSystem three_edge_pair() {
  auto g = std::make_shared<Graph>(4);
  const_cast<Graph&>(*g).add_edge(0, 2);
  const_cast<Graph&>(*g).add_edge(0, 3);
  const_cast<Graph&>(*g).add_edge(1, 2);
  return pair_system(g, {0, 1}, {2, 3});
}

GraphPtr random_bipartite(int na, int nb, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  auto g = std::make_shared<Graph>(na + nb);
  for (int u = 0; u < na; ++u)
    for (int v = na; v < na + nb; ++v)
      if (coin(rng)) const_cast<Graph&>(*g).add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("energy values") {
  auto c = std::make_shared<Graph>(complete_multipartite({2, 3}));
  auto full = pair_system(c, {0, 1}, {2, 3, 4});
  CHECK(energy(full, 1.0) == doctest::Approx(6.0));
  CHECK(energy(full, 7.5) == doctest::Approx(6.0));

  auto g = std::make_shared<Graph>(4);
  const_cast<Graph&>(*g).add_edge(0, 2);
  const_cast<Graph&>(*g).add_edge(1, 3);
  auto half = pair_system(g, {0, 1}, {2, 3});
  CHECK(energy(half, 2.0) == doctest::Approx(1.0));  // 4 * (1/2)^2

  auto e = std::make_shared<Graph>(4);
  auto edgeless = pair_system(e, {0, 1}, {2, 3});
  CHECK(energy(edgeless, 2.0) == doctest::Approx(0.0));
  CHECK(log2_energy(edgeless, 2.0) < -1e20L);
  CHECK(log2_energy(4, 2, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("strict balance") {
  auto c = std::make_shared<Graph>(complete_multipartite({2, 2}));
  CHECK(is_strictly_balanced(pair_system(c, {0, 1}, {2, 3}), 2.0));

  auto s = three_edge_pair();
  // At R = 4 the single-edge corner ({a1},{b1}) and the 2-edge row beat the
  // whole pair: 4 * (3/4)^4 ~ 1.266 < 2.
  CHECK_FALSE(is_strictly_balanced(s, 4.0));
  CHECK(is_strictly_balanced(s, 2.0));
}

TEST_CASE("exact extraction worked example") {
  auto s = three_edge_pair();
  auto b = extract_strictly_balanced(s, 4.0, ExtractionMode::exact);
  CHECK(b.certified == BalanceCertificate::exact);
  CHECK(b.system.parts[0] == vs(4, {0}));
  CHECK(b.system.parts[1] == vs(4, {2, 3}));
  CHECK(energy(b.system, 4.0) == doctest::Approx(2.0));
  CHECK(is_strictly_balanced(b.system, 4.0));
}

TEST_CASE("extraction on edgeless input returns the input") {
  auto e = std::make_shared<Graph>(4);
  auto s = pair_system(e, {0, 1}, {2, 3});
  auto b = extract_strictly_balanced(s, 4.0, ExtractionMode::exact);
  CHECK(b.system.parts[0] == s.parts[0]);
  CHECK(b.system.parts[1] == s.parts[1]);
}

TEST_CASE("exact extraction never loses energy and is strictly balanced") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = random_bipartite(5, 5, 0.5, seed);
    auto s = pair_system(g, {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9});
    for (double R : {1.5, 2.0, 4.0}) {
      auto b = extract_strictly_balanced(s, R, ExtractionMode::exact);
      CHECK(log2_energy(b.system, R) >= log2_energy(s, R) - 1e-9L);
      if (b.system.edge_count() > 0) CHECK(is_strictly_balanced(b.system, R));
      // The exact extractor matches the independent maximizer.
      auto best = oracle::max_energy_subsystem_bruteforce(s, R);
      CHECK(std::abs(double(log2_energy(b.system, R) - best.log2_e)) < 1e-9);
    }
  }
}

TEST_CASE("heuristic extraction improves energy without the size guard") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = random_bipartite(30, 30, 0.4, seed);
    std::vector<int> a, b;
    for (int i = 0; i < 30; ++i) a.push_back(i), b.push_back(30 + i);
    auto s = pair_system(g, a, b);
    auto out = extract_strictly_balanced(s, 8.0, ExtractionMode::heuristic);
    CHECK(out.certified == BalanceCertificate::heuristic);
    CHECK(log2_energy(out.system, 8.0) >= log2_energy(s, 8.0) - 1e-9L);
    CHECK(out.system.edge_count() > 0);
  }
}

TEST_CASE("exhaustive guards") {
  auto g = random_bipartite(13, 13, 0.5, 7);
  std::vector<int> a, b;
  for (int i = 0; i < 13; ++i) a.push_back(i), b.push_back(13 + i);
  auto s = pair_system(g, a, b);
  CHECK_THROWS_AS(is_strictly_balanced(s, 2.0), Error);
  CHECK_THROWS_AS(extract_strictly_balanced(s, 2.0, ExtractionMode::exact), Error);
}

TEST_CASE("edge bounds on a complete pair") {
  auto c = std::make_shared<Graph>(complete_multipartite({4, 4}));
  auto s = pair_system(c, {0, 1, 2, 3}, {4, 5, 6, 7});
  auto bal = extract_strictly_balanced(s, 8.0, ExtractionMode::exact);

  std::vector<VertexSet> full = bal.system.parts;
  auto eb = balanced_edge_bound(bal, full, 0.25);
  CHECK(double(eb.bound_a) == doctest::Approx(18.0));  // 16 + 16/8
  REQUIRE(eb.bound_b.has_value());
  CHECK(double(*eb.bound_b) == doctest::Approx(17.0));  // 16 + (1/4)*2*(1/8)*16
  CHECK(double(bal.system.edge_count_in(full)) <= double(eb.bound_a) + 1e-9);
  CHECK(double(bal.system.edge_count_in(full)) <= double(*eb.bound_b) + 1e-9);

  // Ratio 1/2 falls in the gap between eta and (1-eta)^2: bound_b is absent.
  std::vector<VertexSet> half = {vs(8, {0, 1}), full[1]};
  auto eb2 = balanced_edge_bound(bal, half, 0.25);
  CHECK_FALSE(eb2.bound_b.has_value());
  CHECK(double(bal.system.edge_count_in(half)) <= double(eb2.bound_a) + 1e-9);

  // Tiny ratio lands in [0, eta]: bound_b returns.
  std::vector<VertexSet> corner = {vs(8, {0}), vs(8, {4})};
  auto eb3 = balanced_edge_bound(bal, corner, 0.25);
  REQUIRE(eb3.bound_b.has_value());
  CHECK(double(bal.system.edge_count_in(corner)) <= double(*eb3.bound_b) + 1e-9);
}

TEST_CASE("bernoulli inequalities") {
  CHECK(bernoulli_check(4.0, 2.0));
  CHECK(bernoulli_check(0.0, 1.0));
  CHECK_THROWS_AS(bernoulli_check(-1.0, 2.0), Error);
  CHECK_THROWS_AS(bernoulli_check(1.0, 0.5), Error);

  CHECK(stronger_bernoulli_check(1.5, 4.0, 0.25));
  CHECK(stronger_bernoulli_check(100.0, 8.0, 0.25));
  CHECK_THROWS_AS(stronger_bernoulli_check(2.5, 4.0, 0.25), Error);   // gap
  CHECK_THROWS_AS(stronger_bernoulli_check(1.5, 1.0, 0.25), Error);   // R too small
  CHECK_THROWS_AS(stronger_bernoulli_check(1.5, 4.0, 0.5), Error);    // eta too big

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uy(0, 1000), ur(1, 64);
  for (int i = 0; i < 2000; ++i) CHECK(bernoulli_check(uy(rng), ur(rng)));
}

TEST_CASE("subset tuple ordering") {
  std::vector<VertexSet> a = {vs(4, {0}), vs(4, {2})};
  std::vector<VertexSet> b = {vs(4, {0}), vs(4, {2, 3})};
  std::vector<VertexSet> c = {vs(4, {1}), vs(4, {2})};
  CHECK(subset_tuple_less(a, b));   // smaller total size wins
  CHECK(subset_tuple_less(a, c));   // same size: lexicographic
  CHECK_FALSE(subset_tuple_less(b, a));
  CHECK_FALSE(subset_tuple_less(a, a));
}
