#pragma once

#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

// Witness that H[t] is a subgraph of some host graph: one t-set per pattern
// vertex, complete bipartite across every pattern edge. Classes need not be
// independent sets.
struct BlowupCertificate {
  Graph pattern;
  std::vector<VertexSet> classes;
  int t = 0;
  bool degenerate = false;  // t == 0, vacuous certificate

  static BlowupCertificate empty(const Graph& pattern, int universe) {
    BlowupCertificate c;
    c.pattern = pattern;
    c.classes.assign(pattern.n(), VertexSet(universe));
    c.t = 0;
    c.degenerate = true;
    return c;
  }
};

bool verify_blowup(const Graph& g, const BlowupCertificate& cert);

}  // namespace blowup
