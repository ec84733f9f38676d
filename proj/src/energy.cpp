#include "blowup/energy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

constexpr long double kNegInf = -1e30L;

// Flattened view of a small system for subset enumeration: per-part member
// lists plus fast edge counting over per-part index masks.
struct EnumView {
  int k;
  std::vector<std::vector<int>> members;  // part -> sorted vertex ids
  std::vector<std::vector<uint32_t>> rows;  // k==2: rows[0][i] = mask of part-1 neighbors
  std::vector<std::vector<int>> tuple_idx;  // k>=3: per edge, member index in each part

  explicit EnumView(const KPartiteSystem& s) : k(s.k()) {
    for (const auto& p : s.parts) members.push_back(p.to_vector());
    if (k == 2) {
      rows.resize(1);
      for (int a : members[0]) {
        uint32_t m = 0;
        for (size_t j = 0; j < members[1].size(); ++j)
          if (s.host->has_edge(a, members[1][j])) m |= uint32_t{1} << j;
        rows[0].push_back(m);
      }
    } else {
      std::vector<std::vector<int>> pos(k);
      for (int i = 0; i < k; ++i) {
        pos[i].assign(s.host->n(), -1);
        for (size_t j = 0; j < members[i].size(); ++j) pos[i][members[i][j]] = int(j);
      }
      for (const auto& t : s.tuples) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = pos[i][t[i]];
        tuple_idx.push_back(idx);
      }
    }
  }

  long long edges(const std::vector<uint32_t>& masks) const {
    if (k == 2) {
      long long e = 0;
      uint32_t ma = masks[0];
      while (ma) {
        int i = std::countr_zero(ma);
        ma &= ma - 1;
        e += std::popcount(rows[0][i] & masks[1]);
      }
      return e;
    }
    long long e = 0;
    for (const auto& idx : tuple_idx) {
      bool inside = true;
      for (int i = 0; i < k; ++i)
        if (!((masks[i] >> idx[i]) & 1)) { inside = false; break; }
      if (inside) ++e;
    }
    return e;
  }

  long long size_product(const std::vector<uint32_t>& masks) const {
    long long p = 1;
    for (const auto& m : masks) p *= std::popcount(m);
    return p;
  }

  std::vector<VertexSet> to_sets(const std::vector<uint32_t>& masks, int universe) const {
    std::vector<VertexSet> out;
    for (int i = 0; i < k; ++i) {
      VertexSet s(universe);
      uint32_t m = masks[i];
      while (m) {
        int j = std::countr_zero(m);
        m &= m - 1;
        s.set(members[i][j]);
      }
      out.push_back(s);
    }
    return out;
  }

  // Visit every subset-mask tuple (including full and empty).
  void for_each_tuple(const std::function<void(const std::vector<uint32_t>&)>& fn) const {
    std::vector<uint32_t> masks(k, 0);
    std::function<void(int)> rec = [&](int depth) {
      if (depth == k) {
        fn(masks);
        return;
      }
      uint32_t limit = uint32_t{1} << members[depth].size();
      for (uint32_t m = 0; m < limit; ++m) {
        masks[depth] = m;
        rec(depth + 1);
      }
    };
    rec(0);
  }
};

int total_size(const KPartiteSystem& s) {
  int t = 0;
  for (const auto& p : s.parts) t += p.count();
  return t;
}

long long system_degree(const KPartiteSystem& s, int part, int v) {
  if (s.k() == 2) return s.host->neighbors(v).intersection_count(s.parts[1 - part]);
  long long d = 0;
  for (const auto& t : s.tuples)
    if (t[part] == v) ++d;
  return d;
}

}  // namespace

long double log2_energy(long long size_product, long long edges, double R) {
  if (edges == 0 || size_product == 0) return kNegInf;
  long double log_d = std::log2((long double)edges) - std::log2((long double)size_product);
  return std::log2((long double)size_product) + (long double)R * log_d;
}

long double log2_energy(const KPartiteSystem& s, double R) {
  return log2_energy(s.part_size_product(), s.edge_count(), R);
}

double energy(const KPartiteSystem& s, double R) {
  long double le = log2_energy(s, R);
  return le <= kNegInf / 2 ? 0.0 : double(std::exp2(le));
}

bool subset_tuple_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  int sa = 0, sb = 0;
  for (const auto& s : a) sa += s.count();
  for (const auto& s : b) sb += s.count();
  if (sa != sb) return sa < sb;
  for (size_t i = 0; i < a.size(); ++i) {
    auto va = a[i].to_vector(), vb = b[i].to_vector();
    if (va != vb) return va < vb;
  }
  return false;
}

bool is_strictly_balanced(const KPartiteSystem& s, double R) {
  if (total_size(s) > kExhaustiveSumLimit)
    fail(Errc::TooLargeForExhaustive, "is_strictly_balanced guard exceeded");
  EnumView view(s);
  long double full = log2_energy(s, R);
  std::vector<uint32_t> full_masks;
  for (const auto& m : view.members) full_masks.push_back((uint32_t{1} << m.size()) - 1);
  bool balanced = true;
  view.for_each_tuple([&](const std::vector<uint32_t>& masks) {
    if (!balanced || masks == full_masks) return;
    long double le = log2_energy(view.size_product(masks), view.edges(masks), R);
    if (le >= full - kEnergyLogTol) balanced = false;
  });
  return balanced;
}

BalancedSystem extract_strictly_balanced(const KPartiteSystem& s, double R, ExtractionMode mode) {
  BalancedSystem out;
  out.R = R;
  out.certified =
      mode == ExtractionMode::exact ? BalanceCertificate::exact : BalanceCertificate::heuristic;
  if (s.edge_count() == 0) {
    out.system = s;  // energy 0; returned unchanged by convention
    return out;
  }

  if (mode == ExtractionMode::exact) {
    if (total_size(s) > kExhaustiveSumLimit)
      fail(Errc::TooLargeForExhaustive, "exact extraction guard exceeded");
    EnumView view(s);
    // Pass 1: global maximum of the log-energy.
    long double best = kNegInf;
    view.for_each_tuple([&](const std::vector<uint32_t>& masks) {
      long double le = log2_energy(view.size_product(masks), view.edges(masks), R);
      if (le > best) best = le;
    });
    // Pass 2: among near-ties, the (min total size, lex) representative.
    std::vector<VertexSet> winner;
    view.for_each_tuple([&](const std::vector<uint32_t>& masks) {
      long double le = log2_energy(view.size_product(masks), view.edges(masks), R);
      if (le < best - kEnergyLogTol) return;
      auto sets = view.to_sets(masks, s.host->n());
      if (winner.empty() || subset_tuple_less(sets, winner)) winner = std::move(sets);
    });
    out.system = s.restrict(winner);
    return out;
  }

  // Heuristic: strictly improving single-vertex deletions plus a low-degree
  // sweep at threshold p * (product of other part sizes) / 2.
  KPartiteSystem cur = s;
  long double cur_e = log2_energy(cur, R);
  bool moved = true;
  while (moved) {
    moved = false;
    // best single-vertex deletion
    int best_part = -1, best_v = -1;
    long double best_e = cur_e;
    for (int i = 0; i < cur.k(); ++i) {
      for (int v = cur.parts[i].first(); v >= 0; v = cur.parts[i].next(v)) {
        auto sub = cur.parts;
        sub[i].reset(v);
        long long prod = 1;
        for (const auto& p : sub) prod *= p.count();
        long double le = log2_energy(prod, cur.edge_count_in(sub), R);
        if (le > best_e + kEnergyLogTol) {
          best_e = le;
          best_part = i;
          best_v = v;
        }
      }
    }
    if (best_part >= 0) {
      auto sub = cur.parts;
      sub[best_part].reset(best_v);
      cur = cur.restrict(sub);
      cur_e = best_e;
      moved = true;
      continue;
    }
    // degree sweep per part
    for (int i = 0; i < cur.k(); ++i) {
      long long prod_others = 1;
      for (int j = 0; j < cur.k(); ++j)
        if (j != i) prod_others *= cur.parts[j].count();
      if (prod_others == 0) continue;
      long double p = (long double)cur.edge_count() / ((long double)prod_others * cur.parts[i].count());
      long double threshold = p * prod_others / 2;
      auto sub = cur.parts;
      for (int v = cur.parts[i].first(); v >= 0; v = cur.parts[i].next(v))
        if ((long double)system_degree(cur, i, v) < threshold) sub[i].reset(v);
      if (sub[i] == cur.parts[i]) continue;
      long long prod = 1;
      for (const auto& q : sub) prod *= q.count();
      long double le = log2_energy(prod, cur.edge_count_in(sub), R);
      if (le > cur_e + kEnergyLogTol) {
        cur = cur.restrict(sub);
        cur_e = le;
        moved = true;
        break;
      }
    }
  }
  out.system = std::move(cur);
  return out;
}

EdgeBounds balanced_edge_bound(const BalancedSystem& b, const std::vector<VertexSet>& subsets,
                               std::optional<double> eta) {
  const auto& s = b.system;
  long double p = s.part_size_product() == 0
                      ? 0.0L
                      : (long double)s.edge_count() / (long double)s.part_size_product();
  long long prod_x = 1;
  for (const auto& x : subsets) prod_x *= x.count();
  long long prod_a = s.part_size_product();
  EdgeBounds out;
  out.bound_a = p * prod_x + p / (long double)b.R * prod_a;
  if (eta) {
    long double e = *eta;
    bool ok = e > 0 && e <= 0.25L && b.R >= std::log2(1.0L / e);
    if (ok && prod_a > 0) {
      long double ratio = (long double)prod_x / (long double)prod_a;
      ok = (ratio <= e) || (ratio >= (1 - e) * (1 - e));
    }
    if (ok) out.bound_b = p * prod_x + (e * std::log2(1.0L / e)) * p / (long double)b.R * prod_a;
  }
  return out;
}

bool bernoulli_check(double y, double R) {
  if (y < 0 || R < 1) fail(Errc::PreconditionFailed, "bernoulli_check needs y >= 0, R >= 1");
  long double lhs = std::pow((long double)y, 1.0L / R);
  long double rhs = 1.0L + (long double)y / R;
  return lhs <= rhs * (1 + 1e-15L);
}

bool stronger_bernoulli_check(double y, double R, double eta) {
  if (eta <= 0 || eta > 0.25) fail(Errc::PreconditionFailed, "eta outside (0, 1/4]");
  if (R < std::log2(1.0 / eta)) fail(Errc::PreconditionFailed, "R < log2(1/eta)");
  double hi = 1.0 / ((1 - eta) * (1 - eta));
  if (!((y >= 1 && y <= hi) || y >= 1.0 / eta))
    fail(Errc::PreconditionFailed, "y outside [1,(1-eta)^-2] u [1/eta,inf)");
  long double lhs = std::pow((long double)y, 1.0L / R);
  long double rhs = 1.0L + ((long double)eta * std::log2(1.0L / (long double)eta)) * y / R;
  return lhs <= rhs * (1 + 1e-15L);
}

}  // namespace blowup
