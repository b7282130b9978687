#include "polymat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polymat/classify.hpp"
#include "polymat/json_io.hpp"

namespace polymat {

namespace {

struct Options {
  std::string graph_file;
  std::string family;
  std::string cap;
  std::string format = "json";
  std::string set;
  std::string mode = "exchange";
  std::string hrep_file;
  std::string theorem;
  std::string family_kind = "path";
  int n_min = 4;
  int n_max = 6;
  int cap_max = 2;
  int max_n = -1;
  long long max_candidates = -1;
  std::uint64_t seed = 12345;
  int threads = 1;
};

int parse_int_token(const std::string& tok, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error("invalid " + what + " '" + tok + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) out.push_back(parse_int_token(tok, what));
  if (out.empty()) throw Error(what + " list is empty");
  return out;
}

Graph load_graph(const Options& opt) {
  if (opt.graph_file.empty() == opt.family.empty())
    throw Error("exactly one of --graph FILE or --family SPEC is required");
  if (!opt.graph_file.empty()) {
    std::ifstream in(opt.graph_file);
    if (!in) throw Error("cannot open graph file '" + opt.graph_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }
  return build_family(parse_family(opt.family));
}

CapacityVector load_cap(const Options& opt, int n) {
  if (opt.cap.empty()) throw Error("--cap LIST|uniform:K is required");
  if (opt.cap.rfind("uniform:", 0) == 0)
    return CapacityVector(n, parse_int_token(opt.cap.substr(8), "uniform capacity"));
  std::vector<int> c = parse_int_list(opt.cap, "capacity");
  return c;
}

Limits load_limits(const Options& opt) {
  Limits lim;
  if (const char* env = std::getenv("POLYMAT_MAX_N")) {
    try {
      lim.max_rank_n = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(std::string("invalid POLYMAT_MAX_N value '") + env + "'");
    }
  }
  if (opt.max_n > 0) lim.max_rank_n = opt.max_n;
  if (opt.max_candidates > 0) lim.max_filter_candidates = opt.max_candidates;
  return lim;
}

bool json_format(const Options& opt) {
  if (opt.format == "json") return true;
  if (opt.format == "text") return false;
  throw Error("--format must be json or text");
}

std::string cap_str(const CapacityVector& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s;
}

std::string subset_str(Subset a) {
  std::string s = "{";
  const auto vs = subset_vertices(a);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

void print_gorenstein_text(std::ostream& out, const GorensteinReport& r) {
  out << "gorenstein: " << (r.gorenstein ? "true" : "false") << "\n";
  out << "k: " << (r.k ? std::to_string(*r.k) : "-") << "\n";
  out << "delta: " << r.delta << "\n";
  if (r.anomaly) out << "anomaly: no closed & inseparable subset exists\n";
  out << "closed & inseparable subsets:\n";
  for (const auto& sr : r.closed_inseparable)
    out << "  " << subset_str(sr.set) << " rank " << sr.rank << "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    if (w.kind == GorensteinWitness::Kind::non_integer_ratio)
      out << "witness: (|A|+1)/rank(A) is not a positive integer for A = "
          << subset_str(w.first.set) << " (rank " << w.first.rank << ")\n";
    else
      out << "witness: incompatible subsets " << subset_str(w.first.set) << " (rank "
          << w.first.rank << ") and " << subset_str(w.second->set) << " (rank "
          << w.second->rank << ")\n";
  }
}

void print_sweep_text(std::ostream& out, const SweepReport& rep) {
  out << std::left << std::setw(24) << "family" << std::setw(22) << "cap" << std::setw(6)
      << "pred" << std::setw(6) << "comp" << std::setw(7) << "match" << std::setw(4) << "k"
      << std::setw(7) << "delta" << std::setw(13) << "conv" << "conv_ok\n";
  for (const auto& row : rep.rows) {
    out << std::left << std::setw(24) << row.family << std::setw(22) << cap_str(row.cap)
        << std::setw(6) << (row.predicted ? "T" : "F") << std::setw(6)
        << (row.computed ? "T" : "F") << std::setw(7) << (row.match ? "yes" : "NO")
        << std::setw(4) << (row.k ? std::to_string(*row.k) : "-") << std::setw(7) << row.delta
        << std::setw(13)
        << (row.predicted_conv == ConvClass::unspecified ? "-" : to_string(row.predicted_conv))
        << (row.conv_checked ? (row.conv_ok ? "yes" : "NO") : "-") << "\n";
  }
  out << "rows: " << rep.rows.size() << "  failures: " << rep.failures() << "\n";
}

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out) {
  const Limits lim = load_limits(opt);
  const bool json = json_format(opt);

  if (cmd == "sweep") {
    const TheoremId id = theorem_from_string(opt.theorem);
    const auto grid = acceptance_grid(id, opt.seed);
    const SweepReport rep = sweep(id, grid, lim, opt.threads);
    if (json) {
      for (const auto& row : rep.rows) out << to_json(row) << "\n";
      out << sweep_summary_json(rep) << "\n";
    } else {
      print_sweep_text(out, rep);
    }
    return rep.passed() ? 0 : 1;
  }

  if (cmd == "exceptional-scan") {
    FamilySpec::Kind kind;
    if (opt.family_kind == "complete")
      kind = FamilySpec::Kind::complete;
    else if (opt.family_kind == "cycle")
      kind = FamilySpec::Kind::cycle;
    else if (opt.family_kind == "path")
      kind = FamilySpec::Kind::path;
    else
      throw Error("--family-kind must be complete, cycle, or path");
    const auto grid = scan_grid(kind, opt.n_min, opt.n_max, opt.cap_max, opt.seed);
    const auto hits = exceptional_scan(grid, lim, opt.threads);
    if (json) {
      for (const auto& hit : hits) out << to_json(hit) << "\n";
    } else {
      for (const auto& hit : hits)
        out << hit.family << "  c=(" << cap_str(hit.cap) << ")  delta=" << hit.delta
            << "  k=" << hit.k << "\n";
      out << "exceptional hits: " << hits.size() << "\n";
    }
    return 0;
  }

  const Graph g = load_graph(opt);
  const CapacityVector c = load_cap(opt, g.n());

  if (cmd == "delta") {
    const int d = delta(g, c);
    if (json)
      out << "{\"delta\":" << d << "}\n";
    else
      out << d << "\n";
    return 0;
  }

  if (cmd == "bases") {
    BasesMode mode;
    if (opt.mode == "exchange")
      mode = BasesMode::exchange;
    else if (opt.mode == "filter")
      mode = BasesMode::filter;
    else
      throw Error("--mode must be exchange or filter");
    const BaseSet b = bases(g, c, mode, lim.max_filter_candidates);
    if (json) {
      out << to_json(b) << "\n";
    } else {
      out << "delta: " << b.delta << "\n";
      for (const auto& a : b.bases) out << "  (" << cap_str(a) << ")\n";
    }
    return 0;
  }

  if (cmd == "rank") {
    if (opt.set.empty()) throw Error("--set LIST is required for rank");
    const Subset x = subset_from_vertices(parse_int_list(opt.set, "vertex"), g.n());
    const BaseSet b = bases(g, c);
    const int r = rank_of(b, x);
    if (json) {
      const auto vs = subset_vertices(x);
      out << "{\"rank\":" << r << ",\"set\":[";
      for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
      out << "]}\n";
    } else {
      out << r << "\n";
    }
    return 0;
  }

  if (cmd == "rank-table") {
    const BaseSet b = bases(g, c);
    const RankTable t = rank_table(b, lim.max_rank_n);
    if (json) {
      out << to_json(t) << "\n";
    } else {
      for (Subset a = 0; a < t.rank.size(); ++a)
        out << subset_str(a) << " " << t.rank[a] << "\n";
    }
    return 0;
  }

  if (cmd == "closed-sets") {
    const BaseSet b = bases(g, c);
    const RankTable t = rank_table(b, lim.max_rank_n);
    const SubsetClassification cls = closed_inseparable_sets(t);
    if (json) {
      out << to_json(cls) << "\n";
    } else {
      for (const auto& sr : cls.closed_inseparable)
        out << subset_str(sr.set) << " rank " << sr.rank << "\n";
    }
    return 0;
  }

  if (cmd == "gorenstein") {
    const GorensteinReport r = gorenstein_report(g, c, lim);
    if (json)
      out << to_json(r) << "\n";
    else
      print_gorenstein_text(out, r);
    return 0;
  }

  if (cmd == "verify-hrep") {
    if (opt.hrep_file.empty()) throw Error("--hrep FILE is required for verify-hrep");
    std::ifstream in(opt.hrep_file);
    if (!in) throw Error("cannot open H-description file '" + opt.hrep_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const HDescription h = h_description_from_json(buf.str());
    const bool ok = verify_h_description(g, c, h, lim);
    if (json)
      out << "{\"match\":" << (ok ? "true" : "false") << "}\n";
    else
      out << (ok ? "match" : "mismatch") << "\n";
    return ok ? 0 : 1;
  }

  throw Error("unknown command '" + cmd + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"computation engine for capacity-bounded edge-multiset polymatroids of graphs"};
  app.require_subcommand(1);

  Options opt;
  std::vector<CLI::App*> subs;
  for (const char* name :
       {"delta", "bases", "rank", "rank-table", "closed-sets", "gorenstein", "verify-hrep",
        "sweep", "exceptional-scan"}) {
    CLI::App* sub = app.add_subcommand(name, "");
    sub->add_option("--graph", opt.graph_file, "graph file");
    sub->add_option("--family", opt.family,
                    "family spec: complete:N, kmn:M,N, cycle:N, path:N, whisker:(inner), "
                    "cmcw:R,S,FILE");
    sub->add_option("--cap", opt.cap, "capacity vector: comma list or uniform:K");
    sub->add_option("--format", opt.format, "output format: json or text");
    sub->add_option("--max-n", opt.max_n, "rank-table size cap override");
    sub->add_option("--max-candidates", opt.max_candidates, "filter-mode candidate cap");
    sub->add_option("--seed", opt.seed, "seed for sampled capacity grids");
    sub->add_option("--threads", opt.threads, "worker threads for sweeps and scans");
    subs.push_back(sub);
  }
  app.get_subcommand("bases")->add_option("--mode", opt.mode, "exchange or filter");
  app.get_subcommand("rank")->add_option("--set", opt.set, "subset as a comma list of vertices");
  app.get_subcommand("verify-hrep")->add_option("--hrep", opt.hrep_file, "H-description JSON file");
  app.get_subcommand("sweep")->add_option("--theorem", opt.theorem,
                                          "one of: complete_4_6, complete_bipartite_5_3, "
                                          "path_6_5, cycle_4_5, regular_bipartite_7_2, "
                                          "regular_c2_7_3, whiskered_8_1, cmcw_9_2");
  auto* scan = app.get_subcommand("exceptional-scan");
  scan->add_option("--family-kind", opt.family_kind, "complete, cycle, or path");
  scan->add_option("--n-min", opt.n_min, "smallest family size");
  scan->add_option("--n-max", opt.n_max, "largest family size");
  scan->add_option("--cap-max", opt.cap_max, "largest capacity entry in the grid");

  std::vector<std::string> argv_store;
  argv_store.push_back("polymat");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (CLI::App* sub : subs)
      if (sub->parsed()) return dispatch(sub->get_name(), opt, out);
    throw Error("no command given");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace polymat
