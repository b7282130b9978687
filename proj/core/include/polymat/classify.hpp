#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymat/gorenstein.hpp"

namespace polymat {

// One classification theorem, encoded as a predicate on (family, c).
enum class TheoremId {
  complete_4_6,
  complete_bipartite_5_3,
  path_6_5,
  cycle_4_5,
  regular_bipartite_7_2,
  regular_c2_7_3,
  whiskered_8_1,
  cmcw_9_2,
};

std::string to_string(TheoremId id);
TheoremId theorem_from_string(std::string_view s);
std::vector<TheoremId> all_theorems();

// Identity of the polytope when the classification pins it down. unit_cube
// and two_cube are the 0/1 and 0/2 boxes; exceptional means neither.
enum class ConvClass { unit_cube, two_cube, exceptional, unspecified };
std::string to_string(ConvClass c);

struct Prediction {
  bool gorenstein = false;
  ConvClass conv = ConvClass::unspecified;
};

// The theorem's stated verdict; throws when (spec, c) lies outside the
// predicate's declared domain.
Prediction predict(TheoremId id, const FamilySpec& spec, const CapacityVector& c);

struct SweepInstance {
  FamilySpec spec;
  CapacityVector cap;
};

struct SweepRow {
  std::string family;
  CapacityVector cap;
  bool predicted = false;
  bool computed = false;
  bool match = false;  // predicted == computed
  std::optional<int> k;
  int delta = 0;
  ConvClass predicted_conv = ConvClass::unspecified;
  bool conv_checked = false;
  bool conv_ok = true;
};

struct SweepReport {
  TheoremId id{};
  std::vector<SweepRow> rows;
  int failures() const;  // mismatched rows plus failed polytope-identity checks
  bool passed() const { return failures() == 0; }
};

SweepReport sweep(TheoremId id, const std::vector<SweepInstance>& instances,
                  const Limits& lim = {}, int threads = 1);

// Per-theorem instance grids used by the verification suite and the CLI
// `sweep` command. Capacity sampling is reproducible from the seed.
std::vector<SweepInstance> acceptance_grid(TheoremId id, uint64_t seed);

struct ExceptionalHit {
  std::string family;
  CapacityVector cap;
  int delta = 0;
  int k = 0;
};

// Gorenstein instances whose polytope is neither the 0/1 box nor the 0/2
// box, decided against both candidates by verify_h_description.
std::vector<ExceptionalHit> exceptional_scan(const std::vector<SweepInstance>& instances,
                                             const Limits& lim = {}, int threads = 1);

// Capacity grids for a single-parameter family: exhaustive over
// {1..cap_max}^n when that count stays within exhaustive_limit, otherwise a
// seeded sample of sample_count vectors.
std::vector<SweepInstance> scan_grid(FamilySpec::Kind kind, int n_lo, int n_hi, int cap_max,
                                     uint64_t seed, long long exhaustive_limit = 100000,
                                     int sample_count = 1000);

// Hypothesis tests backing the uniform-capacity properties: no nonneighbor
// of i has its whole neighborhood inside N(i); graph-wide variant over all
// nonadjacent pairs (requires connectivity).
bool nonneighbors_not_dominated(const Graph& g, int i);
bool no_nested_neighborhoods_between_nonadjacent(const Graph& g);

bool bases_equal_uniform(const BaseSet& b, int n, int value);

// The four capacity vectors on the 5-path with exceptional Gorenstein
// polytopes.
std::vector<CapacityVector> path5_gorenstein_caps();

}  // namespace polymat
