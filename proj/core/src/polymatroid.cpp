#include "polymat/polymatroid.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace polymat {

namespace {

void check_capacity(const Graph& g, const CapacityVector& c) {
  if (static_cast<int>(c.size()) != g.n())
    throw Error("capacity vector has length " + std::to_string(c.size()) +
                ", expected " + std::to_string(g.n()));
  long long sum = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1)
      throw Error("capacity c_" + std::to_string(i + 1) + " = " + std::to_string(c[i]) +
                  " must be >= 1");
    sum += c[i];
  }
  // the searches recurse once per chosen edge, so delta <= sum/2 bounds the
  // stack depth
  if (sum > 20000)
    throw Error("capacity sum " + std::to_string(sum) + " exceeds the desk-scale cap 20000");
}

// Mixed-radix key for vectors v with 0 <= v_i <= caps_i. Falls back to an
// ordered map when the key space does not fit in 64 bits.
class VectorKey {
 public:
  explicit VectorKey(const std::vector<int>& caps) : radix_(caps.size(), 0) {
    unsigned __int128 prod = 1;
    for (size_t i = 0; i < caps.size(); ++i) {
      radix_[i] = static_cast<uint64_t>(prod);
      prod *= static_cast<unsigned>(caps[i] + 1);
      if (prod > static_cast<unsigned __int128>(UINT64_MAX)) {
        fits_ = false;
        return;
      }
    }
  }
  bool fits() const { return fits_; }
  uint64_t encode(const std::vector<int>& v) const {
    uint64_t k = 0;
    for (size_t i = 0; i < v.size(); ++i) k += radix_[i] * static_cast<uint64_t>(v[i]);
    return k;
  }

 private:
  std::vector<uint64_t> radix_;
  bool fits_ = true;
};

template <typename V>
class VectorMemo {
 public:
  explicit VectorMemo(const std::vector<int>& caps) : key_(caps) {}
  const V* find(const std::vector<int>& v) const {
    if (key_.fits()) {
      auto it = fast_.find(key_.encode(v));
      return it == fast_.end() ? nullptr : &it->second;
    }
    auto it = slow_.find(v);
    return it == slow_.end() ? nullptr : &it->second;
  }
  void put(const std::vector<int>& v, V val) {
    if (key_.fits())
      fast_[key_.encode(v)] = val;
    else
      slow_[v] = val;
  }

 private:
  VectorKey key_;
  std::unordered_map<uint64_t, V> fast_;
  std::map<std::vector<int>, V> slow_;
};

// delta by depth-first search over residual capacities: f(res) is the
// largest number of further edges that fit, memoized on the residual
// vector. The loop stops early once the parity bound sum(res)/2 is met.
class DeltaSearch {
 public:
  DeltaSearch(const Graph& g, const CapacityVector& c) : g_(g), memo_(c) {}

  int max_additional(std::vector<int>& res) {
    if (const int* hit = memo_.find(res)) return *hit;
    const int cap = std::accumulate(res.begin(), res.end(), 0) / 2;
    int best = 0;
    for (const auto& [u, v] : g_.edges()) {
      if (best == cap) break;
      if (res[u - 1] > 0 && res[v - 1] > 0) {
        --res[u - 1];
        --res[v - 1];
        best = std::max(best, 1 + max_additional(res));
        ++res[u - 1];
        ++res[v - 1];
      }
    }
    memo_.put(res, best);
    return best;
  }

 private:
  const Graph& g_;
  VectorMemo<int> memo_;
};

// Exact realizability of a target degree vector: repeatedly consume the
// lowest-index positive coordinate through one of its incident edges.
class RealizabilitySearch {
 public:
  RealizabilitySearch(const Graph& g, const std::vector<int>& caps) : g_(g), memo_(caps) {}

  bool realizable(std::vector<int>& t) {
    size_t v = 0;
    while (v < t.size() && t[v] == 0) ++v;
    if (v == t.size()) return true;
    if (const char* hit = memo_.find(t)) return *hit != 0;
    bool ok = false;
    for (int u : g_.neighbors(static_cast<int>(v) + 1)) {
      if (t[u - 1] > 0) {
        --t[v];
        --t[u - 1];
        ok = realizable(t);
        ++t[v];
        ++t[u - 1];
        if (ok) break;
      }
    }
    memo_.put(t, ok ? 1 : 0);
    return ok;
  }

 private:
  const Graph& g_;
  VectorMemo<char> memo_;
};

// Extracts one optimal degree vector by walking the delta memo downhill.
ExponentVector seed_base(const Graph& g, const CapacityVector& c, DeltaSearch& ds, int d) {
  std::vector<int> res = c;
  ExponentVector a(g.n(), 0);
  for (int remaining = d; remaining > 0; --remaining) {
    bool stepped = false;
    for (const auto& [u, v] : g.edges()) {
      if (res[u - 1] > 0 && res[v - 1] > 0) {
        --res[u - 1];
        --res[v - 1];
        if (ds.max_additional(res) == remaining - 1) {
          ++a[u - 1];
          ++a[v - 1];
          stepped = true;
          break;
        }
        ++res[u - 1];
        ++res[v - 1];
      }
    }
    if (!stepped) throw Error("internal: no optimal continuation while seeding the base set");
  }
  return a;
}

void enumerate_candidates(const CapacityVector& c, const std::vector<int>& suffix,
                          RealizabilitySearch& rs, std::vector<int>& a, size_t i, int rem,
                          std::vector<ExponentVector>& out) {
  if (i == c.size()) {
    auto t = a;
    if (rs.realizable(t)) out.push_back(a);
    return;
  }
  const int lo = std::max(0, rem - suffix[i + 1]);
  const int hi = std::min(c[i], rem);
  for (int v = lo; v <= hi; ++v) {
    a[i] = v;
    enumerate_candidates(c, suffix, rs, a, i + 1, rem - v, out);
  }
  a[i] = 0;
}

}  // namespace

int delta(const Graph& g, const CapacityVector& c) {
  check_capacity(g, c);
  DeltaSearch ds(g, c);
  std::vector<int> res = c;
  return ds.max_additional(res);
}

bool is_realizable(const Graph& g, const ExponentVector& a) {
  if (static_cast<int>(a.size()) != g.n())
    throw Error("exponent vector has length " + std::to_string(a.size()) + ", expected " +
                std::to_string(g.n()));
  long long total = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0)
      throw Error("exponent a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) +
                  " must be >= 0");
    total += a[i];
  }
  if (total > 20000)
    throw Error("exponent total " + std::to_string(total) + " exceeds the desk-scale cap 20000");
  if (total % 2 != 0) return false;
  RealizabilitySearch rs(g, a);
  auto t = a;
  return rs.realizable(t);
}

BaseSet bases(const Graph& g, const CapacityVector& c, BasesMode mode,
              long long max_filter_candidates) {
  check_capacity(g, c);
  DeltaSearch ds(g, c);
  std::vector<int> res = c;
  const int d = ds.max_additional(res);
  const int target = 2 * d;
  RealizabilitySearch rs(g, c);

  BaseSet out;
  out.delta = d;

  if (mode == BasesMode::filter) {
    unsigned __int128 count = 1;
    for (int ci : c) {
      count *= static_cast<unsigned>(ci + 1);
      if (count > static_cast<unsigned __int128>(max_filter_candidates))
        throw Error("filter mode: candidate count prod(c_i + 1) exceeds the cap " +
                    std::to_string(max_filter_candidates));
    }
    std::vector<int> suffix(c.size() + 1, 0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + c[i];
    std::vector<int> a(c.size(), 0);
    enumerate_candidates(c, suffix, rs, a, 0, target, out.bases);
    return out;  // emitted in lexicographic order
  }

  const ExponentVector seed = seed_base(g, c, ds, d);
  std::set<ExponentVector> seen{seed};
  std::queue<ExponentVector> work;
  work.push(seed);
  while (!work.empty()) {
    ExponentVector a = std::move(work.front());
    work.pop();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < a.size(); ++j) {
        if (j == i || a[j] >= c[j]) continue;
        ExponentVector b = a;
        --b[i];
        ++b[j];
        if (seen.count(b)) continue;
        auto t = b;
        if (rs.realizable(t)) {
          seen.insert(b);
          work.push(b);
        }
      }
    }
  }
  out.bases.assign(seen.begin(), seen.end());
  return out;
}

PointSet downward_closure(const BaseSet& b) {
  if (b.bases.empty()) throw Error("downward_closure: base set is empty");
  std::set<ExponentVector> pts;
  std::vector<ExponentVector> stack(b.bases.begin(), b.bases.end());
  while (!stack.empty()) {
    ExponentVector a = std::move(stack.back());
    stack.pop_back();
    if (!pts.insert(a).second) continue;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] > 0) {
        ExponentVector d = a;
        --d[i];
        if (!pts.count(d)) stack.push_back(std::move(d));
      }
    }
  }
  PointSet out;
  out.points.assign(pts.begin(), pts.end());
  return out;
}

}  // namespace polymat
