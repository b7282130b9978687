#pragma once

#include <string>
#include <string_view>

#include "polymat/classify.hpp"

namespace polymat {

// JSON renderings with sorted keys and sorted sets, so identical inputs
// produce byte-identical output.
std::string to_json(const BaseSet& b);
std::string to_json(const PointSet& p);
std::string to_json(const RankTable& t);
std::string to_json(const SubsetClassification& c);
std::string to_json(const GorensteinReport& r);
std::string to_json(const HDescription& h);
std::string to_json(const SweepRow& row);
std::string to_json(const ExceptionalHit& hit);
std::string sweep_summary_json(const SweepReport& rep);

// Reads {"ineqs":[{"a":[...],"b":int},...]}.
HDescription h_description_from_json(std::string_view text);

}  // namespace polymat
