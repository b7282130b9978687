#pragma once

#include <vector>

#include "polymat/graph.hpp"

namespace polymat {

using CapacityVector = std::vector<int>;   // entries >= 1
using ExponentVector = std::vector<int>;   // entries >= 0

// Bases of the discrete polymatroid: the degree vectors a <= c of edge
// multisets of maximum size. All members share total 2*delta. Sorted
// lexicographically.
struct BaseSet {
  int delta = 0;
  std::vector<ExponentVector> bases;
};

// Downward-closed lattice point set (the divisors of the bases).
struct PointSet {
  std::vector<ExponentVector> points;  // sorted lexicographically
};

enum class BasesMode { exchange, filter };

// Largest q such that some multiset of q edges has degree vector <= c.
int delta(const Graph& g, const CapacityVector& c);

// True iff some edge multiset of g has degree vector exactly a.
bool is_realizable(const Graph& g, const ExponentVector& a);

// Exchange mode grows the base set from one optimum via single-step moves
// a -> a - e_i + e_j; filter mode enumerates every candidate a <= c of
// total 2*delta and keeps the realizable ones (refused when the candidate
// count prod(c_i + 1) exceeds the cap).
BaseSet bases(const Graph& g, const CapacityVector& c,
              BasesMode mode = BasesMode::exchange,
              long long max_filter_candidates = 100000000LL);

PointSet downward_closure(const BaseSet& b);

}  // namespace polymat
