#include "polymat/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <thread>

namespace polymat {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::complete_4_6: return "complete_4_6";
    case TheoremId::complete_bipartite_5_3: return "complete_bipartite_5_3";
    case TheoremId::path_6_5: return "path_6_5";
    case TheoremId::cycle_4_5: return "cycle_4_5";
    case TheoremId::regular_bipartite_7_2: return "regular_bipartite_7_2";
    case TheoremId::regular_c2_7_3: return "regular_c2_7_3";
    case TheoremId::whiskered_8_1: return "whiskered_8_1";
    case TheoremId::cmcw_9_2: return "cmcw_9_2";
  }
  throw Error("unknown theorem id");
}

TheoremId theorem_from_string(std::string_view s) {
  for (TheoremId id : all_theorems())
    if (to_string(id) == s) return id;
  throw Error("unknown theorem '" + std::string(s) + "'");
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::complete_4_6,         TheoremId::complete_bipartite_5_3,
          TheoremId::path_6_5,             TheoremId::cycle_4_5,
          TheoremId::regular_bipartite_7_2, TheoremId::regular_c2_7_3,
          TheoremId::whiskered_8_1,        TheoremId::cmcw_9_2};
}

std::string to_string(ConvClass c) {
  switch (c) {
    case ConvClass::unit_cube: return "unit_cube";
    case ConvClass::two_cube: return "two_cube";
    case ConvClass::exceptional: return "exceptional";
    case ConvClass::unspecified: return "unspecified";
  }
  throw Error("unknown polytope class");
}

namespace {

bool uniform_value(const CapacityVector& c, int v) {
  return std::all_of(c.begin(), c.end(), [v](int x) { return x == v; });
}

bool is_uniform(const CapacityVector& c) {
  return std::all_of(c.begin(), c.end(), [&](int x) { return x == c.front(); });
}

void check_cap_len(const CapacityVector& c, int n, TheoremId id) {
  if (static_cast<int>(c.size()) != n)
    throw Error(to_string(id) + ": capacity vector has length " + std::to_string(c.size()) +
                ", expected " + std::to_string(n));
}

// Capacity pattern behind the unbalanced Gorenstein bipartite cases: the
// part of size p carries the base value v everywhere, the other part (of
// size 2p - 1, p >= 2) carries v or p*v entrywise.
bool star_pattern(const CapacityVector& c, int off_small, int small, int off_big, int big,
                  int v) {
  if (small < 2 || big != 2 * small - 1) return false;
  for (int i = 0; i < small; ++i)
    if (c[off_small + i] != v) return false;
  for (int i = 0; i < big; ++i)
    if (c[off_big + i] != v && c[off_big + i] != small * v) return false;
  return true;
}

// Lowering any capacity to the singleton rank min(c_i, sum of neighbor
// capacities) leaves the feasible edge multisets unchanged, so the base
// set, the polytope, and the verdict only depend on this reduced vector.
// The classification patterns are stated for reduced capacities.
CapacityVector reduced_capacity(const Graph& g, const CapacityVector& c) {
  CapacityVector out(c.size());
  for (int i = 1; i <= g.n(); ++i) out[i - 1] = rank_singleton_formula(g, c, i);
  return out;
}

}  // namespace

bool nonneighbors_not_dominated(const Graph& g, int i) {
  const auto& ni = g.neighbors(i);
  for (int k = 1; k <= g.n(); ++k) {
    if (k == i || g.has_edge(i, k)) continue;
    bool inside = true;
    for (int u : g.neighbors(k))
      if (u != i && !std::binary_search(ni.begin(), ni.end(), u)) {
        inside = false;
        break;
      }
    if (inside) return false;
  }
  return true;
}

bool no_nested_neighborhoods_between_nonadjacent(const Graph& g) {
  if (!g.is_connected()) return false;
  for (int i = 1; i <= g.n(); ++i)
    if (!nonneighbors_not_dominated(g, i)) return false;
  return true;
}

bool bases_equal_uniform(const BaseSet& b, int n, int value) {
  return b.bases.size() == 1 && b.bases.front() == ExponentVector(n, value);
}

std::vector<CapacityVector> path5_gorenstein_caps() {
  return {{1, 1, 1, 1, 1}, {1, 1, 2, 1, 1}, {2, 2, 2, 2, 2}, {2, 2, 4, 2, 2}};
}

Prediction predict(TheoremId id, const FamilySpec& spec, const CapacityVector& c) {
  switch (id) {
    case TheoremId::complete_4_6: {
      if (spec.kind != FamilySpec::Kind::complete)
        throw Error("complete_4_6 expects a complete:N family");
      check_cap_len(c, spec.n, id);
      const CapacityVector cr = reduced_capacity(complete_graph(spec.n), c);
      if (uniform_value(cr, 2)) return {true, ConvClass::two_cube};
      if (uniform_value(cr, 1)) {
        if (spec.n % 2 == 0) return {true, ConvClass::unit_cube};
        if (spec.n == 3) return {true, ConvClass::exceptional};
      }
      return {};
    }
    case TheoremId::cycle_4_5: {
      if (spec.kind != FamilySpec::Kind::cycle)
        throw Error("cycle_4_5 expects a cycle:N family");
      check_cap_len(c, spec.n, id);
      const CapacityVector cr = reduced_capacity(cycle_graph(spec.n), c);
      if (uniform_value(cr, 2)) return {true, ConvClass::two_cube};
      if (uniform_value(cr, 1)) {
        if (spec.n % 2 == 0) return {true, ConvClass::unit_cube};
        if (spec.n == 3) return {true, ConvClass::exceptional};
      }
      return {};
    }
    case TheoremId::path_6_5: {
      if (spec.kind != FamilySpec::Kind::path)
        throw Error("path_6_5 expects a path:N family");
      check_cap_len(c, spec.n, id);
      const CapacityVector cr = reduced_capacity(path_graph(spec.n), c);
      if (spec.n % 2 == 0) {
        if (uniform_value(cr, 1)) return {true, ConvClass::unit_cube};
        if (uniform_value(cr, 2)) return {true, ConvClass::two_cube};
      } else if (spec.n == 5) {
        for (const auto& cap : path5_gorenstein_caps())
          if (cr == cap) return {true, ConvClass::exceptional};
      }
      return {};
    }
    case TheoremId::complete_bipartite_5_3: {
      if (spec.kind != FamilySpec::Kind::complete_bipartite)
        throw Error("complete_bipartite_5_3 expects a kmn:M,N family");
      const int m = spec.m, n2 = spec.n;
      check_cap_len(c, m + n2, id);
      const CapacityVector cr = reduced_capacity(complete_bipartite(m, n2), c);
      long long sum_first = 0, sum_second = 0;
      for (int i = 0; i < m; ++i) sum_first += cr[i];
      for (int i = 0; i < n2; ++i) sum_second += cr[m + i];
      if (sum_first == sum_second) {
        if (uniform_value(cr, 1)) return {true, ConvClass::unit_cube};
        if (uniform_value(cr, 2)) return {true, ConvClass::two_cube};
        return {};
      }
      for (int v : {1, 2}) {
        if (star_pattern(cr, 0, m, m, n2, v) || star_pattern(cr, m, n2, 0, m, v))
          return {true, ConvClass::exceptional};
      }
      return {};
    }
    case TheoremId::whiskered_8_1: {
      if (spec.kind != FamilySpec::Kind::whiskered || !spec.inner)
        throw Error("whiskered_8_1 expects a whisker:(inner) family");
      const Graph g = build_family(spec);
      const int inner_n = g.n() / 2;
      check_cap_len(c, 2 * inner_n, id);
      const CapacityVector cr = reduced_capacity(g, c);
      bool first1 = true, first2 = true, pend2 = true;
      for (int i = 0; i < inner_n; ++i) {
        first1 = first1 && cr[i] == 1;
        first2 = first2 && cr[i] == 2;
      }
      for (int i = inner_n; i < 2 * inner_n; ++i) pend2 = pend2 && cr[i] >= 2;
      if (first1) return {true, ConvClass::unit_cube};
      if (first2 && pend2) return {true, ConvClass::two_cube};
      return {};
    }
    case TheoremId::cmcw_9_2: {
      if (spec.kind != FamilySpec::Kind::cameron_walker)
        throw Error("cmcw_9_2 expects a cmcw:R,S family");
      const int r = spec.r, s = spec.s, n = 2 * r + 3 * s;
      check_cap_len(c, n, id);
      const CapacityVector cr = reduced_capacity(build_family(spec), c);
      bool ok = true;
      for (int i = 1; i <= n; ++i) {
        const bool pendant_leaf = (i >= r + 1 && i <= 2 * r);
        ok = ok && (pendant_leaf ? cr[i - 1] >= 2 : cr[i - 1] == 2);
      }
      return {ok, ok ? ConvClass::two_cube : ConvClass::unspecified};
    }
    case TheoremId::regular_bipartite_7_2: {
      const Graph g = build_family(spec);
      if (!(g.is_connected() && g.is_regular() && g.is_bipartite()))
        throw Error("regular_bipartite_7_2 expects a connected regular bipartite graph");
      check_cap_len(c, g.n(), id);
      const CapacityVector cr = reduced_capacity(g, c);
      if (uniform_value(cr, 1)) return {true, ConvClass::unit_cube};
      if (uniform_value(cr, 2)) return {true, ConvClass::two_cube};
      return {};
    }
    case TheoremId::regular_c2_7_3: {
      const Graph g = build_family(spec);
      if (!g.is_regular()) throw Error("regular_c2_7_3 expects a regular graph");
      check_cap_len(c, g.n(), id);
      if (!uniform_value(c, 2))
        throw Error("regular_c2_7_3 applies to c = (2,...,2) only");
      return {true, ConvClass::two_cube};
    }
  }
  throw Error("unknown theorem id");
}

namespace {

template <typename F>
void parallel_for(std::size_t count, int threads, F&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int nt = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

int SweepReport::failures() const {
  int bad = 0;
  for (const auto& row : rows)
    if (!row.match || (row.conv_checked && !row.conv_ok)) ++bad;
  return bad;
}

SweepReport sweep(TheoremId id, const std::vector<SweepInstance>& instances, const Limits& lim,
                  int threads) {
  SweepReport rep;
  rep.id = id;
  rep.rows.resize(instances.size());

  parallel_for(instances.size(), threads, [&](std::size_t idx) {
    const SweepInstance& inst = instances[idx];
    SweepRow row;
    row.family = inst.spec.label;
    row.cap = inst.cap;
    const Prediction pred = predict(id, inst.spec, inst.cap);
    row.predicted = pred.gorenstein;
    row.predicted_conv = pred.conv;
    const Graph g = build_family(inst.spec);

    if (id == TheoremId::regular_c2_7_3) {
      // the claim here is exactly that the base set collapses to (2,...,2);
      // no rank table is materialized
      const BaseSet b = bases(g, inst.cap);
      row.delta = b.delta;
      const bool two = bases_equal_uniform(b, g.n(), 2);
      row.computed = two;
      if (two) row.k = 1;
      row.conv_checked = true;
      row.conv_ok = two;
    } else {
      const BaseSet b = bases(g, inst.cap);
      const GorensteinReport r = gorenstein_report(g, inst.cap, b, lim);
      row.computed = r.gorenstein;
      row.delta = r.delta;
      row.k = r.k;
      if (pred.gorenstein && r.gorenstein && pred.conv != ConvClass::unspecified) {
        row.conv_checked = true;
        switch (pred.conv) {
          case ConvClass::unit_cube:
            row.conv_ok = (id == TheoremId::regular_bipartite_7_2)
                              ? verify_h_description(g, inst.cap, b, box_description(g.n(), 1), lim)
                              : bases_equal_uniform(b, g.n(), 1);
            break;
          case ConvClass::two_cube:
            row.conv_ok = (id == TheoremId::regular_bipartite_7_2)
                              ? verify_h_description(g, inst.cap, b, box_description(g.n(), 2), lim)
                              : bases_equal_uniform(b, g.n(), 2);
            break;
          case ConvClass::exceptional:
            row.conv_ok = !bases_equal_uniform(b, g.n(), 1) && !bases_equal_uniform(b, g.n(), 2);
            break;
          case ConvClass::unspecified:
            break;
        }
      }
    }
    row.match = row.predicted == row.computed;
    rep.rows[idx] = std::move(row);
  });
  return rep;
}

namespace {

uint64_t draw_below(std::mt19937_64& rng, uint64_t k) {
  const uint64_t lim = UINT64_MAX - UINT64_MAX % k;
  uint64_t x;
  do {
    x = rng();
  } while (x >= lim);
  return x % k;
}

CapacityVector random_cap(std::mt19937_64& rng, int n, int hi) {
  CapacityVector c(n);
  for (auto& x : c) x = 1 + static_cast<int>(draw_below(rng, hi));
  return c;
}

std::vector<CapacityVector> sampled_caps(std::mt19937_64& rng, int n, int hi, int count,
                                         bool skip_uniform) {
  std::vector<CapacityVector> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    CapacityVector c = random_cap(rng, n, hi);
    if (skip_uniform && is_uniform(c)) continue;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CapacityVector> exhaustive_caps(int n, int hi) {
  std::vector<CapacityVector> out;
  CapacityVector c(n, 1);
  for (;;) {
    out.push_back(c);
    int i = n - 1;
    while (i >= 0 && c[i] == hi) c[i--] = 1;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

void push_caps(std::vector<SweepInstance>& out, const FamilySpec& spec,
               std::vector<CapacityVector> caps) {
  for (auto& c : caps) out.push_back({spec, std::move(c)});
}

std::mt19937_64 grid_rng(TheoremId id, uint64_t seed) {
  return std::mt19937_64(seed + 1000003ULL * static_cast<uint64_t>(id));
}

}  // namespace

std::vector<SweepInstance> acceptance_grid(TheoremId id, uint64_t seed) {
  std::vector<SweepInstance> out;
  std::mt19937_64 rng = grid_rng(id, seed);

  switch (id) {
    case TheoremId::complete_4_6: {
      for (int n = 3; n <= 7; ++n) {
        const FamilySpec spec = family_complete(n);
        for (int u : {1, 2, 3}) out.push_back({spec, CapacityVector(n, u)});
        push_caps(out, spec, sampled_caps(rng, n, 3, 100, /*skip_uniform=*/true));
      }
      break;
    }
    case TheoremId::complete_bipartite_5_3: {
      for (int m = 1; m <= 7; ++m) {
        for (int n2 = std::max(1, 3 - m); m + n2 <= 8; ++n2) {
          const FamilySpec spec = family_complete_bipartite(m, n2);
          const int total = m + n2;
          out.push_back({spec, CapacityVector(total, 1)});
          out.push_back({spec, CapacityVector(total, 2)});
          // the full subset grid behind the unbalanced Gorenstein patterns
          auto subset_patterns = [&](int small, int off_big, int big) {
            for (unsigned mask = 0; mask < (1u << big); ++mask) {
              for (int v : {1, 2}) {
                CapacityVector c(total, v);
                for (int i = 0; i < big; ++i)
                  c[off_big + i] = (mask >> i & 1u) ? small * v : v;
                out.push_back({spec, std::move(c)});
              }
            }
          };
          if (n2 == 2 * m - 1 && (m == 2 || m == 3)) subset_patterns(m, m, n2);
          if (m == 2 * n2 - 1 && (n2 == 2 || n2 == 3)) subset_patterns(n2, 0, m);
          push_caps(out, spec, sampled_caps(rng, total, 4, 20, /*skip_uniform=*/false));
        }
      }
      break;
    }
    case TheoremId::path_6_5: {
      for (int n = 3; n <= 8; ++n) {
        const FamilySpec spec = family_path(n);
        push_caps(out, spec, exhaustive_caps(n, 2));
        if (n == 5) {
          push_caps(out, spec, path5_gorenstein_caps());
          push_caps(out, spec, sampled_caps(rng, n, 4, 50, /*skip_uniform=*/false));
        }
      }
      break;
    }
    case TheoremId::cycle_4_5: {
      for (int n = 3; n <= 8; ++n) {
        const FamilySpec spec = family_cycle(n);
        out.push_back({spec, CapacityVector(n, 1)});
        out.push_back({spec, CapacityVector(n, 2)});
        push_caps(out, spec, sampled_caps(rng, n, 3, 30, /*skip_uniform=*/true));
      }
      break;
    }
    case TheoremId::regular_bipartite_7_2: {
      std::vector<FamilySpec> specs = {family_cycle(4), family_cycle(6), family_cycle(8),
                                       family_complete_bipartite(3, 3),
                                       custom_family("cube3", cube_graph())};
      for (const auto& spec : specs) {
        const int n = build_family(spec).n();
        out.push_back({spec, CapacityVector(n, 1)});
        out.push_back({spec, CapacityVector(n, 2)});
        push_caps(out, spec, sampled_caps(rng, n, 3, 10, /*skip_uniform=*/true));
      }
      break;
    }
    case TheoremId::regular_c2_7_3: {
      std::vector<FamilySpec> specs = {family_cycle(5), family_complete(4), family_complete(5),
                                       custom_family("cube3", cube_graph()),
                                       custom_family("petersen", petersen_graph())};
      for (const auto& spec : specs) {
        const int n = build_family(spec).n();
        out.push_back({spec, CapacityVector(n, 2)});
      }
      break;
    }
    case TheoremId::whiskered_8_1: {
      std::vector<FamilySpec> inners = {family_complete(3), family_path(3), family_path(4),
                                        family_cycle(4)};
      for (auto& inner : inners) {
        const int n = build_family(inner).n();
        const FamilySpec spec = family_whisker(std::move(inner));
        push_caps(out, spec, exhaustive_caps(2 * n, 3));
      }
      break;
    }
    case TheoremId::cmcw_9_2: {
      std::vector<FamilySpec> specs = {
          family_cameron_walker({{1, 3}}, 1, 1),
          family_cameron_walker({{1, 5}, {2, 5}}, 2, 1),
          family_cameron_walker({{1, 3}, {1, 4}}, 1, 2),
      };
      for (const auto& spec : specs) {
        const int n = 2 * spec.r + 3 * spec.s;
        push_caps(out, spec, exhaustive_caps(n, 3));
      }
      break;
    }
  }
  return out;
}

std::vector<ExceptionalHit> exceptional_scan(const std::vector<SweepInstance>& instances,
                                             const Limits& lim, int threads) {
  std::vector<std::optional<ExceptionalHit>> slots(instances.size());
  parallel_for(instances.size(), threads, [&](std::size_t idx) {
    const SweepInstance& inst = instances[idx];
    const Graph g = build_family(inst.spec);
    const BaseSet b = bases(g, inst.cap);
    const GorensteinReport r = gorenstein_report(g, inst.cap, b, lim);
    if (!r.gorenstein) return;
    const int cap_max = *std::max_element(inst.cap.begin(), inst.cap.end());
    // a candidate box with a side beyond every capacity cannot match D
    const bool q1 = verify_h_description(g, inst.cap, b, box_description(g.n(), 1), lim);
    const bool q2 =
        cap_max >= 2 && verify_h_description(g, inst.cap, b, box_description(g.n(), 2), lim);
    if (!q1 && !q2)
      slots[idx] = ExceptionalHit{inst.spec.label, inst.cap, r.delta, r.k.value_or(0)};
  });
  std::vector<ExceptionalHit> hits;
  for (auto& s : slots)
    if (s) hits.push_back(std::move(*s));
  return hits;
}

std::vector<SweepInstance> scan_grid(FamilySpec::Kind kind, int n_lo, int n_hi, int cap_max,
                                     uint64_t seed, long long exhaustive_limit,
                                     int sample_count) {
  std::vector<SweepInstance> out;
  std::mt19937_64 rng(seed);
  for (int n = n_lo; n <= n_hi; ++n) {
    FamilySpec spec;
    switch (kind) {
      case FamilySpec::Kind::complete: spec = family_complete(n); break;
      case FamilySpec::Kind::cycle: spec = family_cycle(n); break;
      case FamilySpec::Kind::path: spec = family_path(n); break;
      default:
        throw Error("scan_grid supports complete, cycle, and path families");
    }
    long long count = 1;
    bool exhaustive = true;
    for (int i = 0; i < n && exhaustive; ++i) {
      count *= cap_max;
      if (count > exhaustive_limit) exhaustive = false;
    }
    if (exhaustive)
      push_caps(out, spec, exhaustive_caps(n, cap_max));
    else
      push_caps(out, spec, sampled_caps(rng, n, cap_max, sample_count, /*skip_uniform=*/false));
  }
  return out;
}

}  // namespace polymat
