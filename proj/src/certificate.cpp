#include "blowup/certificate.hpp"

namespace blowup {

bool verify_blowup(const Graph& g, const BlowupCertificate& cert) {
  if (int(cert.classes.size()) != cert.pattern.n()) return false;
  for (const auto& cls : cert.classes) {
    if (cls.universe() != g.n()) return false;
    if (cls.count() != cert.t) return false;
  }
  // pairwise disjoint
  for (size_t i = 0; i < cert.classes.size(); ++i)
    for (size_t j = i + 1; j < cert.classes.size(); ++j)
      if (cert.classes[i].intersects(cert.classes[j])) return false;
  // completeness across every pattern edge
  for (int u = 0; u < cert.pattern.n(); ++u) {
    const Bitset& pnb = cert.pattern.neighbors(u);
    for (int v = pnb.next(u); v >= 0; v = pnb.next(v)) {
      for (int x = cert.classes[u].first(); x >= 0; x = cert.classes[u].next(x))
        if (!cert.classes[v].is_subset_of(g.neighbors(x))) return false;
    }
  }
  return true;
}

}  // namespace blowup
