#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace polymat_test {

int delta_oracle(const Graph& g, const CapacityVector& c) {
  const auto& edges = g.edges();
  std::map<std::pair<std::size_t, std::vector<int>>, int> memo;
  std::function<int(std::size_t, std::vector<int>&)> rec = [&](std::size_t i,
                                                               std::vector<int>& res) -> int {
    if (i == edges.size()) return 0;
    const auto key = std::make_pair(i, res);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto [u, v] = edges[i];
    int best = 0;
    int m = 0;
    for (;; ++m) {
      best = std::max(best, m + rec(i + 1, res));
      if (res[u - 1] == 0 || res[v - 1] == 0) break;
      --res[u - 1];
      --res[v - 1];
    }
    res[u - 1] += m;
    res[v - 1] += m;
    memo[key] = best;
    return best;
  };
  std::vector<int> res = c;
  return rec(0, res);
}

bool realizable_oracle(const Graph& g, const ExponentVector& a) {
  if (std::accumulate(a.begin(), a.end(), 0LL) % 2 != 0) return false;
  const auto& edges = g.edges();
  std::map<std::pair<std::size_t, std::vector<int>>, bool> memo;
  std::function<bool(std::size_t, std::vector<int>&)> rec = [&](std::size_t i,
                                                                std::vector<int>& t) -> bool {
    if (i == edges.size())
      return std::all_of(t.begin(), t.end(), [](int x) { return x == 0; });
    const auto key = std::make_pair(i, t);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto [u, v] = edges[i];
    bool ok = false;
    int m = 0;
    for (;; ++m) {
      if (rec(i + 1, t)) {
        ok = true;
        break;
      }
      if (t[u - 1] == 0 || t[v - 1] == 0) break;
      --t[u - 1];
      --t[v - 1];
    }
    t[u - 1] += m;
    t[v - 1] += m;
    memo[key] = ok;
    return ok;
  };
  std::vector<int> t = a;
  return rec(0, t);
}

std::vector<ExponentVector> bases_oracle(const Graph& g, const CapacityVector& c) {
  const int target = 2 * delta_oracle(g, c);
  std::vector<ExponentVector> out;
  ExponentVector a(c.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
    if (i == c.size()) {
      if (rem == 0 && realizable_oracle(g, a)) out.push_back(a);
      return;
    }
    for (int v = 0; v <= std::min(c[i], rem); ++v) {
      a[i] = v;
      rec(i + 1, rem - v);
    }
    a[i] = 0;
  };
  rec(0, target);
  return out;
}

int matching_oracle(const Graph& g) {
  const int n = g.n();
  std::function<int(int, std::vector<char>&)> rec = [&](int v, std::vector<char>& used) -> int {
    while (v <= n && used[v]) ++v;
    if (v > n) return 0;
    used[v] = 1;
    int best = rec(v + 1, used);  // v stays unmatched
    for (int u : g.neighbors(v)) {
      if (!used[u]) {
        used[u] = 1;
        best = std::max(best, 1 + rec(v + 1, used));
        used[u] = 0;
      }
    }
    used[v] = 0;
    return best;
  };
  std::vector<char> used(n + 1, 0);
  return rec(1, used);
}

std::set<ExponentVector> divisor_union_oracle(const BaseSet& b) {
  std::set<ExponentVector> pts;
  for (const auto& base : b.bases) {
    ExponentVector x(base.size(), 0);
    for (;;) {
      pts.insert(x);
      std::size_t i = x.size();
      while (i > 0 && x[i - 1] == base[i - 1]) x[--i] = 0;
      if (i == 0) break;
      ++x[i - 1];
    }
  }
  return pts;
}

bool is_closed_definitional(const RankTable& t, Subset a) {
  const Subset full = (1u << t.n) - 1u;
  const Subset comp = full & ~a;
  for (Subset extra = comp; extra != 0; extra = (extra - 1) & comp)
    if (t.rank[a | extra] <= t.rank[a]) return false;
  return true;
}

std::uint64_t Rng::below(std::uint64_t k) {
  const std::uint64_t lim = UINT64_MAX - UINT64_MAX % k;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= lim);
  return x % k;
}

Graph random_connected_graph(Rng& rng, int n) {
  std::set<Edge> seen;
  for (int v = 2; v <= n; ++v) {
    const int u = 1 + static_cast<int>(rng.below(v - 1));
    seen.insert({u, v});
  }
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!seen.count({u, v}) && rng.below(10) < 3) seen.insert({u, v});
  return Graph(n, std::vector<Edge>(seen.begin(), seen.end()));
}

CapacityVector random_capacity(Rng& rng, int n, int max_entry) {
  CapacityVector c(n);
  for (auto& x : c) x = 1 + static_cast<int>(rng.below(max_entry));
  return c;
}

}  // namespace polymat_test
