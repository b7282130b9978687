#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "polymat/polymatroid.hpp"

using namespace polymat;

namespace {

// instances reused across the property checks below
std::vector<std::pair<Graph, CapacityVector>> small_instances() {
  std::vector<std::pair<Graph, CapacityVector>> out;
  out.push_back({cycle_graph(4), {1, 1, 1, 1}});
  out.push_back({cycle_graph(5), {1, 1, 1, 1, 1}});
  out.push_back({complete_graph(3), {1, 1, 1}});
  out.push_back({path_graph(5), {1, 1, 2, 1, 1}});
  out.push_back({path_graph(5), {2, 2, 4, 2, 2}});
  out.push_back({complete_bipartite(2, 3), {1, 1, 2, 1, 2}});
  out.push_back({whisker(complete_graph(3)), {2, 2, 2, 3, 2, 2}});
  polymat_test::Rng rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(5));
    Graph g = polymat_test::random_connected_graph(rng, n);
    CapacityVector c = polymat_test::random_capacity(rng, n, 3);
    out.push_back({std::move(g), std::move(c)});
  }
  return out;
}

}  // namespace

TEST_CASE("delta on the worked examples") {
  CHECK(delta(cycle_graph(4), {1, 1, 1, 1}) == 2);
  CHECK(delta(cycle_graph(5), {1, 1, 1, 1, 1}) == 2);
  CHECK(delta(path_graph(5), {2, 2, 2, 2, 2}) == 4);
  CHECK(delta(path_graph(3), {1, 1, 1}) == 1);
}

TEST_CASE("delta input validation") {
  CHECK_THROWS_WITH_AS(delta(cycle_graph(4), {1, 1, 1}), doctest::Contains("length"), Error);
  CHECK_THROWS_WITH_AS(delta(cycle_graph(4), {1, 0, 1, 1}), doctest::Contains(">= 1"), Error);
}

TEST_CASE("delta is monotone and bounded by half the capacity sum") {
  polymat_test::Rng rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const Graph g = polymat_test::random_connected_graph(rng, n);
    CapacityVector c = polymat_test::random_capacity(rng, n, 3);
    const int d = delta(g, c);
    CHECK(d >= 1);
    CHECK(d <= std::accumulate(c.begin(), c.end(), 0) / 2);
    CapacityVector bigger = c;
    bigger[rng.below(n)] += 1 + static_cast<int>(rng.below(2));
    CHECK(delta(g, bigger) >= d);
  }
}

TEST_CASE("is_realizable on the worked examples") {
  CHECK(is_realizable(cycle_graph(4), {1, 1, 1, 1}));
  CHECK_FALSE(is_realizable(path_graph(3), {1, 0, 1}));
  CHECK(is_realizable(path_graph(5), {1, 2, 2, 2, 1}));
  CHECK_FALSE(is_realizable(path_graph(3), {1, 1, 1}));  // odd total
  CHECK_THROWS_WITH_AS(is_realizable(path_graph(3), {1, 1}), doctest::Contains("length"), Error);
  CHECK_THROWS_WITH_AS(is_realizable(path_graph(3), {1, -1, 0}), doctest::Contains(">= 0"),
                       Error);
}

TEST_CASE("bases reproduces the worked examples") {
  const BaseSet p5 = bases(path_graph(5), {1, 1, 1, 1, 1});
  CHECK(p5.delta == 2);
  CHECK(p5.bases == std::vector<ExponentVector>{
                        {0, 1, 1, 1, 1}, {1, 1, 0, 1, 1}, {1, 1, 1, 1, 0}});

  const BaseSet k3 = bases(complete_graph(3), {1, 1, 1});
  CHECK(k3.delta == 1);
  CHECK(k3.bases == std::vector<ExponentVector>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

  const BaseSet c4 = bases(cycle_graph(4), {2, 2, 2, 2});
  CHECK(c4.delta == 4);
  CHECK(c4.bases == std::vector<ExponentVector>{{2, 2, 2, 2}});

  const BaseSet p5mid = bases(path_graph(5), {1, 1, 2, 1, 1});
  CHECK(p5mid.bases == std::vector<ExponentVector>{
                           {0, 1, 1, 1, 1}, {0, 1, 2, 1, 0}, {1, 1, 0, 1, 1}, {1, 1, 1, 1, 0}});
}

TEST_CASE("filter mode refuses oversized candidate spaces") {
  CHECK_THROWS_WITH_AS(bases(cycle_graph(4), {9, 9, 9, 9}, BasesMode::filter, 100),
                       doctest::Contains("cap"), Error);
  CHECK_NOTHROW(bases(cycle_graph(4), {9, 9, 9, 9}, BasesMode::exchange, 100));
}

TEST_CASE("exchange mode agrees with filter mode and the brute-force oracle") {
  for (const auto& [g, c] : small_instances()) {
    const BaseSet ex = bases(g, c, BasesMode::exchange);
    const BaseSet fi = bases(g, c, BasesMode::filter);
    CHECK(ex.delta == fi.delta);
    CHECK(ex.bases == fi.bases);
    CHECK(ex.delta == polymat_test::delta_oracle(g, c));
    CHECK(ex.bases == polymat_test::bases_oracle(g, c));
  }
}

TEST_CASE("base sets satisfy the symmetric exchange property") {
  for (const auto& [g, c] : small_instances()) {
    const BaseSet b = bases(g, c);
    std::set<ExponentVector> members(b.bases.begin(), b.bases.end());
    const int target = 2 * b.delta;
    for (const auto& a : b.bases) {
      CHECK(std::accumulate(a.begin(), a.end(), 0) == target);
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] <= c[i]);
      CHECK(is_realizable(g, a));
    }
    for (const auto& u : b.bases) {
      for (const auto& v : b.bases) {
        if (u == v) continue;
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (u[i] <= v[i]) continue;
          bool swapped = false;
          for (std::size_t j = 0; j < u.size() && !swapped; ++j) {
            if (u[j] >= v[j]) continue;
            ExponentVector w = u;
            --w[i];
            ++w[j];
            swapped = members.count(w) > 0;
          }
          CHECK(swapped);
        }
      }
    }
  }
}

TEST_CASE("downward closure of a single base is its divisor set") {
  BaseSet b;
  b.delta = 1;
  b.bases = {{1, 1, 0}};
  const PointSet d = downward_closure(b);
  CHECK(d.points == std::vector<ExponentVector>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}});
}

TEST_CASE("downward closure of the triangle misses only the top corner") {
  const PointSet d = downward_closure(bases(complete_graph(3), {1, 1, 1}));
  std::vector<ExponentVector> expect;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        if (!(x && y && z)) expect.push_back({x, y, z});
  std::sort(expect.begin(), expect.end());
  CHECK(d.points == expect);
}

TEST_CASE("downward closure size frozen from the divisor-union oracle") {
  const BaseSet b = bases(path_graph(5), {1, 1, 1, 1, 1});
  const PointSet d = downward_closure(b);
  CHECK(d.points.size() == 28);
  const auto oracle = polymat_test::divisor_union_oracle(b);
  CHECK(std::vector<ExponentVector>(oracle.begin(), oracle.end()) == d.points);
}

TEST_CASE("downward closure contains the origin and every unit vector") {
  for (const auto& [g, c] : small_instances()) {
    const PointSet d = downward_closure(bases(g, c));
    std::set<ExponentVector> pts(d.points.begin(), d.points.end());
    CHECK(pts.count(ExponentVector(g.n(), 0)) == 1);
    for (int i = 0; i < g.n(); ++i) {
      ExponentVector e(g.n(), 0);
      e[i] = 1;
      CHECK(pts.count(e) == 1);
    }
    // downward closed
    for (const auto& p : d.points)
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0) {
          ExponentVector q = p;
          --q[i];
          CHECK(pts.count(q) == 1);
        }
  }
}
