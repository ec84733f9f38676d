#pragma once

#include <cstdint>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

Graph gen_gnp(int n, double p, uint64_t seed);

// Edges between distinct parts appear independently with probability p;
// parts stay independent sets.
Graph gen_multipartite(const std::vector<int>& part_sizes, double p, uint64_t seed);

// Tripartite instance with pair densities 1/2, sqrt(gamma), sqrt(gamma):
// the (A,B) pair is the dense one.
Graph gen_hard(int n, double gamma, uint64_t seed);

}  // namespace blowup
