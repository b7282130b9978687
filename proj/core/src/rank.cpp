#include "polymat/rank.hpp"

#include <algorithm>
#include <bit>

namespace polymat {

namespace {

int table_n(const BaseSet& b) {
  if (b.bases.empty()) throw Error("base set is empty");
  return static_cast<int>(b.bases.front().size());
}

void check_subset(const RankTable& t, Subset a, bool allow_empty = false) {
  if (!allow_empty && a == 0) throw Error("subset must be nonempty");
  if (t.n < 32 && (a >> t.n) != 0)
    throw Error("subset contains a vertex outside 1.." + std::to_string(t.n));
}

}  // namespace

std::vector<int> subset_vertices(Subset a) {
  std::vector<int> out;
  for (int i = 0; a != 0; ++i, a >>= 1)
    if (a & 1u) out.push_back(i + 1);
  return out;
}

Subset subset_from_vertices(const std::vector<int>& vs, int n) {
  Subset a = 0;
  for (int v : vs) {
    if (v < 1 || v > n)
      throw Error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    Subset bit = 1u << (v - 1);
    if (a & bit) throw Error("vertex " + std::to_string(v) + " listed twice");
    a |= bit;
  }
  return a;
}

int rank_of(const BaseSet& b, Subset x) {
  const int n = table_n(b);
  if (n < 32 && (x >> n) != 0)
    throw Error("subset contains a vertex outside 1.." + std::to_string(n));
  int best = 0;
  for (const auto& u : b.bases) {
    int s = 0;
    for (Subset m = x; m != 0; m &= m - 1) s += u[std::countr_zero(m)];
    best = std::max(best, s);
  }
  return best;
}

int rank_singleton_formula(const Graph& g, const CapacityVector& c, int i) {
  if (static_cast<int>(c.size()) != g.n())
    throw Error("capacity vector has length " + std::to_string(c.size()) + ", expected " +
                std::to_string(g.n()));
  if (i < 1 || i > g.n())
    throw Error("vertex " + std::to_string(i) + " out of range 1.." + std::to_string(g.n()));
  long long neighbor_sum = 0;
  for (int u : g.neighbors(i)) neighbor_sum += c[u - 1];
  return static_cast<int>(std::min<long long>(c[i - 1], neighbor_sum));
}

RankTable rank_table(const BaseSet& b, int max_n) {
  const int n = table_n(b);
  if (n > max_n)
    throw Error("rank table for n = " + std::to_string(n) + " exceeds the cap " +
                std::to_string(max_n));
  RankTable t;
  t.n = n;
  t.delta = b.delta;
  const std::size_t size = std::size_t{1} << n;
  t.rank.assign(size, 0);
  std::vector<int> sums(size, 0);
  for (const auto& u : b.bases) {
    for (std::size_t mask = 1; mask < size; ++mask) {
      sums[mask] = sums[mask & (mask - 1)] + u[std::countr_zero(static_cast<unsigned>(mask))];
      if (sums[mask] > t.rank[mask]) t.rank[mask] = sums[mask];
    }
  }
  return t;
}

bool is_closed(const RankTable& t, Subset a) {
  check_subset(t, a);
  const int ra = t.rank[a];
  for (int j = 0; j < t.n; ++j) {
    const Subset bit = 1u << j;
    if (a & bit) continue;
    if (t.rank[a | bit] <= ra) return false;
  }
  return true;
}

bool is_inseparable(const RankTable& t, Subset a) {
  check_subset(t, a);
  const Subset low = a & (~a + 1u);
  const Subset rest = a ^ low;
  // parts containing the lowest element; sub == rest would leave the
  // complement empty
  for (Subset sub = rest;; sub = (sub - 1) & rest) {
    if (sub != rest) {
      const Subset part = sub | low;
      if (t.rank[part] + t.rank[a ^ part] == t.rank[a]) return false;
    }
    if (sub == 0) break;
  }
  return true;
}

SubsetClassification closed_inseparable_sets(const RankTable& t) {
  SubsetClassification out;
  const Subset full = (t.n == 32) ? ~0u : ((1u << t.n) - 1u);
  for (Subset a = 1; a <= full; ++a)
    if (is_closed(t, a) && is_inseparable(t, a))
      out.closed_inseparable.push_back({a, t.rank[a]});
  std::sort(out.closed_inseparable.begin(), out.closed_inseparable.end(),
            [](const SubsetRank& x, const SubsetRank& y) {
              const int cx = std::popcount(x.set), cy = std::popcount(y.set);
              return cx != cy ? cx < cy : x.set < y.set;
            });
  return out;
}

}  // namespace polymat
