// Independent reference implementations used to cross-check the engine.
// Everything here deliberately takes a different algorithmic route from the
// production code: index-ordered multiplicity recursion instead of
// lowest-vertex edge decrement, plain enumeration instead of branch and
// bound, ordered-map memo keys instead of mixed-radix encoding.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "polymat/polymatroid.hpp"
#include "polymat/rank.hpp"

namespace polymat_test {

using polymat::BaseSet;
using polymat::CapacityVector;
using polymat::Edge;
using polymat::ExponentVector;
using polymat::Graph;
using polymat::RankTable;
using polymat::Subset;

int delta_oracle(const Graph& g, const CapacityVector& c);
bool realizable_oracle(const Graph& g, const ExponentVector& a);
std::vector<ExponentVector> bases_oracle(const Graph& g, const CapacityVector& c);
int matching_oracle(const Graph& g);
std::set<ExponentVector> divisor_union_oracle(const BaseSet& b);
bool is_closed_definitional(const RankTable& t, Subset a);

// Deterministic sampling helpers shared by the unit and acceptance suites.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t k);
};

Graph random_connected_graph(Rng& rng, int n);
CapacityVector random_capacity(Rng& rng, int n, int max_entry);

}  // namespace polymat_test
