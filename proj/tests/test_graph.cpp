#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "polymat/graph.hpp"

using namespace polymat;

TEST_CASE("parse_graph reads the edge-list format") {
  const Graph g = parse_graph("4\n1 2\n2 3\n3 4\n1 4\n");
  CHECK(g == cycle_graph(4));

  const Graph p = parse_graph("3\n1 2\n2 3\n");
  CHECK(p == path_graph(3));
}

TEST_CASE("parse_graph tolerates comments and whitespace") {
  const Graph g = parse_graph("# a square\n  4  \n1 2\n2 3 # right side\n\n3 4\n1 4\n");
  CHECK(g == cycle_graph(4));
}

TEST_CASE("parse_graph reports violations") {
  CHECK_THROWS_WITH_AS(parse_graph("3\n1 2\n"), doctest::Contains("isolated"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("2\n1 2\n"), doctest::Contains("at least 3"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("4\n1 two\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("3\n1 2\n2 1\n2 3\n"), doctest::Contains("duplicate"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("3\n1 5\n2 3\n"), doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("3\n2 2\n1 3\n"), doctest::Contains("loop"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("\n# only comments\n"), doctest::Contains("vertex count"),
                       Error);
}

TEST_CASE("family constructors") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.edges().size() == 6);

  const Graph k23 = complete_bipartite(2, 3);
  CHECK(k23.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});

  const Graph c5 = cycle_graph(5);
  CHECK(c5.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});

  CHECK_THROWS_AS(path_graph(2), Error);
  CHECK_THROWS_AS(cycle_graph(2), Error);
}

TEST_CASE("serialization round-trips every family graph") {
  const std::vector<Graph> graphs = {
      complete_graph(5),        complete_bipartite(2, 3),      cycle_graph(6),
      path_graph(4),            whisker(complete_graph(3)),    cube_graph(),
      petersen_graph(),         cameron_walker({{1, 3}}, 1, 1)};
  for (const Graph& g : graphs) CHECK(parse_graph(serialize(g)) == g);
}

TEST_CASE("whisker attaches one pendant edge per vertex") {
  const Graph w = whisker(complete_graph(3));
  CHECK(w.n() == 6);
  CHECK(w.edges() ==
        std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}});

  const Graph wp = whisker(path_graph(3));
  CHECK(wp.n() == 6);
  CHECK(wp.edges().size() == 5);

  for (const Graph& inner :
       {complete_graph(3), path_graph(4), cycle_graph(5), petersen_graph()}) {
    const Graph w2 = whisker(inner);
    CHECK(w2.edges().size() == inner.edges().size() + inner.n());
    for (int i = 1; i <= inner.n(); ++i) CHECK(w2.degree(inner.n() + i) == 1);
    CHECK(has_perfect_matching(w2));
  }
}

TEST_CASE("cameron_walker builds the pendant-edge/pendant-triangle graph") {
  const Graph g = cameron_walker({{1, 3}}, 1, 1);
  CHECK(g.n() == 5);
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(matching_number(g) == 2);

  const Graph h = cameron_walker({{1, 5}, {2, 5}}, 2, 1);
  CHECK(h.n() == 7);
  CHECK(h.edges().size() == 7);

  const Graph t = cameron_walker({{1, 3}, {1, 4}}, 1, 2);
  CHECK(t.n() == 8);
  CHECK(matching_number(t) == 3);
  CHECK(t.edges().size() == 2 + 1 + 3 * 2);

  CHECK_THROWS_WITH_AS(cameron_walker({{1, 2}}, 1, 1), doctest::Contains("does not join"),
                       Error);
  CHECK_THROWS_WITH_AS(cameron_walker({{1, 3}}, 1, 2), doctest::Contains("untouched"), Error);
  CHECK_THROWS_WITH_AS(cameron_walker({{1, 5}, {2, 6}}, 2, 2),
                       doctest::Contains("disconnected"), Error);
}

TEST_CASE("matching_number matches exhaustive search on small graphs") {
  CHECK(matching_number(cycle_graph(5)) == 2);
  CHECK(matching_number(path_graph(4)) == 2);
  CHECK(matching_number(complete_graph(7)) == 3);

  polymat_test::Rng rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(6));  // 3..8
    const Graph g = polymat_test::random_connected_graph(rng, n);
    CHECK(matching_number(g) == polymat_test::matching_oracle(g));
  }
}

TEST_CASE("perfect matchings") {
  CHECK(has_perfect_matching(cycle_graph(4)));
  CHECK_FALSE(has_perfect_matching(cycle_graph(5)));
  CHECK(has_perfect_matching(whisker(complete_graph(3))));

  polymat_test::Rng rng(999);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const Graph g = polymat_test::random_connected_graph(rng, n);
    if (has_perfect_matching(g)) CHECK(g.n() % 2 == 0);
  }
}

TEST_CASE("hamiltonicity by exhaustive search") {
  CHECK(is_hamiltonian(complete_graph(4)));
  CHECK_FALSE(is_hamiltonian(path_graph(4)));
  CHECK(is_hamiltonian(cycle_graph(7)));
  CHECK(is_hamiltonian(petersen_graph()) == false);  // classic non-Hamiltonian graph
  CHECK_THROWS_WITH_AS(is_hamiltonian(cycle_graph(18)), doctest::Contains("cap"), Error);
  CHECK(is_hamiltonian(cycle_graph(18), 18));
}

TEST_CASE("graph queries") {
  CHECK(cycle_graph(6).is_bipartite());
  CHECK_FALSE(cycle_graph(5).is_bipartite());
  CHECK(cube_graph().is_regular());
  CHECK(cube_graph().is_bipartite());
  CHECK(petersen_graph().is_regular());
  CHECK_FALSE(petersen_graph().is_bipartite());
  CHECK(petersen_graph().is_connected());
  CHECK_FALSE(whisker(path_graph(3)).is_regular());
}

TEST_CASE("family mini-language") {
  CHECK(build_family(parse_family("complete:4")) == complete_graph(4));
  CHECK(build_family(parse_family("kmn:2,3")) == complete_bipartite(2, 3));
  CHECK(build_family(parse_family("cycle:5")) == cycle_graph(5));
  CHECK(build_family(parse_family("whisker:(path:3)")) == whisker(path_graph(3)));
  CHECK(parse_family("whisker:(complete:3)").label == "whisker:(complete:3)");
  CHECK_THROWS_WITH_AS(parse_family("torus:4"), doctest::Contains("unknown family"), Error);
  CHECK_THROWS_AS(parse_family("path:x"), Error);
  CHECK_THROWS_AS(parse_family("whisker:path:3"), Error);

  const std::string file = "family_h.txt";
  std::ofstream(file) << "3\n1 3\n";  // vertex 2 is the reserved pendant slot
  const FamilySpec cw = parse_family("cmcw:1,1," + file);
  CHECK(cw.label == "cmcw:1,1");
  CHECK(build_family(cw) == cameron_walker({{1, 3}}, 1, 1));
  std::remove(file.c_str());
  CHECK_THROWS_WITH_AS(parse_family("cmcw:1,1,no_such_file.txt"),
                       doctest::Contains("cannot open"), Error);
}
