#pragma once

#include <cstdint>
#include <vector>

#include "polymat/polymatroid.hpp"

namespace polymat {

// Subsets of the ground set [n] as bitmasks, bit i-1 <=> vertex i.
using Subset = std::uint32_t;

std::vector<int> subset_vertices(Subset a);
Subset subset_from_vertices(const std::vector<int>& vs, int n);

struct SubsetRank {
  Subset set = 0;
  int rank = 0;
  bool operator==(const SubsetRank&) const = default;
};

// The ground set rank function materialized for every subset of [n].
// rank[mask] = max over bases of the coordinate sum on the subset.
struct RankTable {
  int n = 0;
  int delta = 0;
  std::vector<int> rank;  // size 1 << n
};

// Direct evaluation, max over bases; rank_of(b, 0) = 0.
int rank_of(const BaseSet& b, Subset x);

// min(c_i, sum of c over the neighbors of i). Equals the table value on
// the singleton {i}.
int rank_singleton_formula(const Graph& g, const CapacityVector& c, int i);

RankTable rank_table(const BaseSet& b, int max_n = 20);

// Closed: every one-element extension strictly raises the rank (by
// monotonicity this is equivalent to the all-supersets definition).
bool is_closed(const RankTable& t, Subset a);

// Inseparable: no two-part split of the subset has additive rank.
bool is_inseparable(const RankTable& t, Subset a);

struct SubsetClassification {
  std::vector<SubsetRank> closed_inseparable;  // sorted by (size, mask)
};

SubsetClassification closed_inseparable_sets(const RankTable& t);

}  // namespace polymat
