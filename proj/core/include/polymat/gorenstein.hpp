#pragma once

#include <optional>
#include <vector>

#include "polymat/rank.hpp"

namespace polymat {

// Size caps, overridable from the CLI (and POLYMAT_MAX_N for the rank cap).
struct Limits {
  int max_rank_n = 20;
  long long max_filter_candidates = 100000000LL;
  long long max_box_points = 100000000LL;
};

struct GorensteinWitness {
  enum class Kind { non_integer_ratio, incompatible_pair };
  Kind kind = Kind::non_integer_ratio;
  SubsetRank first;                   // offending subset, or the k-defining one
  std::optional<SubsetRank> second;   // conflicting subset for incompatible pairs
};

struct GorensteinReport {
  bool gorenstein = false;
  std::optional<int> k;
  int delta = 0;
  std::vector<SubsetRank> closed_inseparable;
  std::optional<GorensteinWitness> witness;
  bool anomaly = false;  // no closed & inseparable subset exists at all
};

// System of inequalities coeffs . x <= bound together with implicit x >= 0.
struct HDescription {
  struct Ineq {
    std::vector<long long> coeffs;
    long long bound = 0;
  };
  std::vector<Ineq> ineqs;
};

// 0 <= x_i <= side for every coordinate.
HDescription box_description(int n, int side);

// Verdict via the rank-function criterion: Gorenstein iff some integer
// k > 0 has k * rank(A) = |A| + 1 for every closed & inseparable subset A.
GorensteinReport gorenstein_report(const Graph& g, const CapacityVector& c,
                                   const Limits& lim = {});
GorensteinReport gorenstein_report(const Graph& g, const CapacityVector& c,
                                   const BaseSet& b, const Limits& lim = {});

// True iff the integer points of the description equal the point set of
// the polymatroid. Points are scanned over the box [0, max(c) + 1]^n; a
// satisfying point outside [0, max(c)]^n is an error.
bool verify_h_description(const Graph& g, const CapacityVector& c, const HDescription& h,
                          const Limits& lim = {});
bool verify_h_description(const Graph& g, const CapacityVector& c, const BaseSet& b,
                          const HDescription& h, const Limits& lim = {});

}  // namespace polymat
