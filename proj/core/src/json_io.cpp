#include "polymat/json_io.hpp"

#include <json.hpp>

namespace polymat {

namespace {

using nlohmann::json;

json subset_rank_json(const SubsetRank& sr) {
  return json{{"set", subset_vertices(sr.set)}, {"rank", sr.rank}};
}

}  // namespace

std::string to_json(const BaseSet& b) {
  json j{{"delta", b.delta}, {"bases", b.bases}};
  return j.dump();
}

std::string to_json(const PointSet& p) {
  json j{{"points", p.points}};
  return j.dump();
}

std::string to_json(const RankTable& t) {
  json j{{"n", t.n}, {"delta", t.delta}, {"rank", t.rank}};
  return j.dump();
}

std::string to_json(const SubsetClassification& c) {
  json j = json::array();
  for (const auto& sr : c.closed_inseparable) {
    json entry = subset_rank_json(sr);
    entry["closed"] = true;
    entry["inseparable"] = true;
    j.push_back(std::move(entry));
  }
  return j.dump();
}

std::string to_json(const GorensteinReport& r) {
  json j;
  j["gorenstein"] = r.gorenstein;
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  j["delta"] = r.delta;
  j["anomaly"] = r.anomaly;
  json cls = json::array();
  for (const auto& sr : r.closed_inseparable) cls.push_back(subset_rank_json(sr));
  j["closed_inseparable"] = std::move(cls);
  if (r.witness) {
    json w;
    w["kind"] = r.witness->kind == GorensteinWitness::Kind::non_integer_ratio
                    ? "non_integer_ratio"
                    : "incompatible_pair";
    w["first"] = subset_rank_json(r.witness->first);
    w["second"] = r.witness->second ? subset_rank_json(*r.witness->second) : json(nullptr);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

std::string to_json(const HDescription& h) {
  json arr = json::array();
  for (const auto& q : h.ineqs) arr.push_back(json{{"a", q.coeffs}, {"b", q.bound}});
  return json{{"ineqs", std::move(arr)}}.dump();
}

std::string to_json(const SweepRow& row) {
  json j;
  j["family"] = row.family;
  j["cap"] = row.cap;
  j["predicted"] = row.predicted;
  j["computed"] = row.computed;
  j["match"] = row.match;
  j["k"] = row.k ? json(*row.k) : json(nullptr);
  j["delta"] = row.delta;
  j["conv"] = row.predicted_conv == ConvClass::unspecified ? json(nullptr)
                                                           : json(to_string(row.predicted_conv));
  j["conv_ok"] = row.conv_checked ? json(row.conv_ok) : json(nullptr);
  return j.dump();
}

std::string to_json(const ExceptionalHit& hit) {
  json j{{"family", hit.family}, {"cap", hit.cap}, {"delta", hit.delta}, {"k", hit.k}};
  return j.dump();
}

std::string sweep_summary_json(const SweepReport& rep) {
  json j;
  j["theorem"] = to_string(rep.id);
  j["rows"] = rep.rows.size();
  j["failures"] = rep.failures();
  j["passed"] = rep.passed();
  return j.dump();
}

HDescription h_description_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("invalid H-description JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ineqs") || !j["ineqs"].is_array())
    throw Error("H-description JSON must be {\"ineqs\":[{\"a\":[...],\"b\":int},...]}");
  HDescription h;
  for (const auto& item : j["ineqs"]) {
    if (!item.is_object() || !item.contains("a") || !item.contains("b") ||
        !item["a"].is_array() || !item["b"].is_number_integer())
      throw Error("each inequality must be {\"a\":[...],\"b\":int}");
    HDescription::Ineq q;
    for (const auto& v : item["a"]) {
      if (!v.is_number_integer()) throw Error("inequality coefficients must be integers");
      q.coeffs.push_back(v.get<long long>());
    }
    q.bound = item["b"].get<long long>();
    h.ineqs.push_back(std::move(q));
  }
  return h;
}

}  // namespace polymat
