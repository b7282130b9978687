#include "polymat/gorenstein.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace polymat {

HDescription box_description(int n, int side) {
  HDescription h;
  for (int i = 0; i < n; ++i) {
    HDescription::Ineq q;
    q.coeffs.assign(n, 0);
    q.coeffs[i] = 1;
    q.bound = side;
    h.ineqs.push_back(std::move(q));
  }
  return h;
}

GorensteinReport gorenstein_report(const Graph& g, const CapacityVector& c, const Limits& lim) {
  return gorenstein_report(g, c, bases(g, c), lim);
}

GorensteinReport gorenstein_report(const Graph& g, const CapacityVector& c, const BaseSet& b,
                                   const Limits& lim) {
  if (b.bases.empty() || static_cast<int>(b.bases.front().size()) != g.n() ||
      static_cast<int>(c.size()) != g.n())
    throw Error("gorenstein_report: base set does not match the graph");
  GorensteinReport rep;
  rep.delta = b.delta;
  const RankTable t = rank_table(b, lim.max_rank_n);
  for (int i = 0; i < t.n; ++i) assert(t.rank[1u << i] >= 1);  // every e_i lies in D
  rep.closed_inseparable = closed_inseparable_sets(t).closed_inseparable;

  if (rep.closed_inseparable.empty()) {
    rep.gorenstein = true;
    rep.anomaly = true;
    return rep;
  }

  const SubsetRank& first = rep.closed_inseparable.front();
  const int need0 = std::popcount(first.set) + 1;
  if (need0 % first.rank != 0) {
    rep.witness = GorensteinWitness{GorensteinWitness::Kind::non_integer_ratio, first, {}};
    return rep;
  }
  const int k = need0 / first.rank;
  for (const SubsetRank& entry : rep.closed_inseparable) {
    const int need = std::popcount(entry.set) + 1;
    if (k * entry.rank == need) continue;
    rep.witness = GorensteinWitness{GorensteinWitness::Kind::incompatible_pair, first, entry};
    return rep;
  }
  rep.gorenstein = true;
  rep.k = k;
  return rep;
}

bool verify_h_description(const Graph& g, const CapacityVector& c, const HDescription& h,
                          const Limits& lim) {
  return verify_h_description(g, c, bases(g, c, BasesMode::exchange, lim.max_filter_candidates),
                              h, lim);
}

bool verify_h_description(const Graph& g, const CapacityVector& c, const BaseSet& b,
                          const HDescription& h, const Limits& lim) {
  const int n = g.n();
  for (const auto& q : h.ineqs)
    if (static_cast<int>(q.coeffs.size()) != n)
      throw Error("inequality has " + std::to_string(q.coeffs.size()) +
                  " coefficients, expected " + std::to_string(n));

  int cap_max = 1;
  for (int ci : c) cap_max = std::max(cap_max, ci);
  const int hi = cap_max + 1;  // one beyond the capacity box, to catch escapes

  unsigned __int128 volume = 1;
  for (int i = 0; i < n; ++i) {
    volume *= static_cast<unsigned>(hi + 1);
    if (volume > static_cast<unsigned __int128>(lim.max_box_points))
      throw Error("verify_h_description: box point count exceeds the cap " +
                  std::to_string(lim.max_box_points));
  }

  const PointSet expected = downward_closure(b);

  std::vector<ExponentVector> found;
  std::vector<int> x(n, 0);
  for (;;) {
    bool sat = true;
    for (const auto& q : h.ineqs) {
      long long lhs = 0;
      for (int i = 0; i < n; ++i) lhs += q.coeffs[i] * x[i];
      if (lhs > q.bound) {
        sat = false;
        break;
      }
    }
    if (sat) {
      if (*std::max_element(x.begin(), x.end()) > cap_max)
        throw Error("description admits integer points outside the capacity box [0," +
                    std::to_string(cap_max) + "]^n");
      found.push_back(x);
    }
    // odometer, last coordinate fastest: emits points in lexicographic order
    int i = n - 1;
    while (i >= 0 && x[i] == hi) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return found == expected.points;
}

}  // namespace polymat
