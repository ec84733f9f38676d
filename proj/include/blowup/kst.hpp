#pragma once

#include "blowup/certificate.hpp"
#include "blowup/graph.hpp"

namespace blowup {

// Guaranteed balanced-biclique order for a bipartite pair of density >= p,
// p in (0, 1/2]: floor(log2(min size) / (2 log2(1/p))).
int kst_order(long long size_x, long long size_y, double p);
int kst_order_log(double log2_min_size, double p);

// Extract a verified K_{t,t} with t >= kst_order(|x|,|y|,p) from a pair of
// density >= p. Greedy seeding with local swaps, exhaustive fallback over
// t-subsets of the smaller side, then greedy growth beyond t.
BlowupCertificate extract_biclique(const Graph& g, const VertexSet& x, const VertexSet& y,
                                   double p);

// Largest balanced biclique reachable by greedy growth only (no guarantee);
// used by the desk-scale pipelines to pick a good stopping point cheaply.
int greedy_biclique_order(const Graph& g, const VertexSet& x, const VertexSet& y);

}  // namespace blowup
