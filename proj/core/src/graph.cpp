#include "polymat/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace polymat {

namespace {

std::string edge_str(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 3)
    throw Error("graph must have at least 3 vertices, got n = " + std::to_string(n_));
  for (auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw Error("edge " + edge_str(u, v) + ": vertex label out of range 1.." + std::to_string(n_));
    if (u == v) throw Error("loop edge " + edge_str(u, v) + " is not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      throw Error("duplicate edge " + edge_str(edges_[i].first, edges_[i].second));
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u - 1].push_back(v);
    adj_[v - 1].push_back(u);
  }
  for (int v = 1; v <= n_; ++v) {
    if (adj_[v - 1].empty())
      throw Error("vertex " + std::to_string(v) + " is isolated");
    std::sort(adj_[v - 1].begin(), adj_[v - 1].end());
  }
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 1 || v > n_)
    throw Error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
  return adj_[v - 1];
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
  std::vector<char> seen(n_ + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj_[v - 1])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  return reached == n_;
}

bool Graph::is_bipartite() const {
  std::vector<int> color(n_ + 1, -1);
  for (int start = 1; start <= n_; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : adj_[v - 1]) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Graph::is_regular() const {
  for (int v = 2; v <= n_; ++v)
    if (degree(v) != degree(1)) return false;
  return true;
}

std::pair<int, std::vector<Edge>> parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::vector<long long> nums;
    std::string tok;
    while (in >> tok) {
      try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        throw Error("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
      }
    }
    if (nums.empty()) continue;

    if (n < 0) {
      if (nums.size() != 1)
        throw Error("line " + std::to_string(line_no) + ": vertex count line must hold a single integer");
      if (nums[0] < 1 || nums[0] > 1000000)
        throw Error("line " + std::to_string(line_no) + ": vertex count " + std::to_string(nums[0]) + " out of range");
      n = static_cast<int>(nums[0]);
    } else {
      if (nums.size() != 2)
        throw Error("line " + std::to_string(line_no) + ": edge line must hold exactly two vertex labels");
      int u = static_cast<int>(nums[0]), v = static_cast<int>(nums[1]);
      if (u < 1 || u > n || v < 1 || v > n)
        throw Error("line " + std::to_string(line_no) + ": vertex label out of range 1.." + std::to_string(n));
      if (u == v)
        throw Error("line " + std::to_string(line_no) + ": loop edge " + edge_str(u, v));
      Edge e{std::min(u, v), std::max(u, v)};
      if (!seen.insert(e).second)
        throw Error("line " + std::to_string(line_no) + ": duplicate edge " + edge_str(e.first, e.second));
      edges.push_back(e);
    }
  }
  if (n < 0) throw Error("graph file has no vertex count line");
  return {n, std::move(edges)};
}

Graph parse_graph(std::string_view text) {
  auto [n, edges] = parse_edge_list(text);
  return Graph(n, std::move(edges));
}

std::string serialize(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph complete_graph(int n) {
  if (n < 3) throw Error("complete graph requires n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1 || m + n < 3)
    throw Error("complete bipartite graph requires m, n >= 1 and m + n >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = m + 1; j <= m + n; ++j) edges.push_back({i, j});
  return Graph(m + n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle requires n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 3) throw Error("path requires n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cube_graph() {
  // vertices 1..8 are the binary words 000..111; edges flip one bit
  std::vector<Edge> edges;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      if (std::popcount(static_cast<unsigned>(a ^ b)) == 1) edges.push_back({a + 1, b + 1});
  return Graph(8, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
  for (int i = 1; i <= 5; ++i) edges.push_back({i, i + 5});
  edges.push_back({6, 8});
  edges.push_back({8, 10});
  edges.push_back({7, 10});
  edges.push_back({7, 9});
  edges.push_back({6, 9});
  return Graph(10, std::move(edges));
}

Graph whisker(const Graph& g) {
  const int n = g.n();
  std::vector<Edge> edges = g.edges();
  for (int i = 1; i <= n; ++i) edges.push_back({i, n + i});
  return Graph(2 * n, std::move(edges));
}

Graph cameron_walker(const std::vector<Edge>& h_edges, int r, int s) {
  if (r < 1 || s < 1) throw Error("cameron_walker requires r >= 1 and s >= 1");
  auto in_left = [r](int v) { return v >= 1 && v <= r; };
  auto in_right = [r, s](int v) { return v >= 2 * r + 1 && v <= 2 * r + s; };
  std::set<Edge> seen;
  std::vector<std::vector<int>> h_adj(2 * r + s + 1);
  for (auto [u, v] : h_edges) {
    int a = std::min(u, v), b = std::max(u, v);
    if (!((in_left(a) && in_right(b)) || (in_left(b) && in_right(a))))
      throw Error("cameron_walker: edge " + edge_str(u, v) + " does not join {1.." +
                  std::to_string(r) + "} to {" + std::to_string(2 * r + 1) + ".." +
                  std::to_string(2 * r + s) + "}");
    if (!seen.insert({a, b}).second)
      throw Error("cameron_walker: duplicate edge " + edge_str(a, b));
    h_adj[a].push_back(b);
    h_adj[b].push_back(a);
  }
  for (int v = 1; v <= 2 * r + s; ++v) {
    if (!in_left(v) && !in_right(v)) continue;
    if (h_adj[v].empty())
      throw Error("cameron_walker: H leaves vertex " + std::to_string(v) + " untouched");
  }
  {
    // connectivity of H on its two blocks
    std::vector<char> vis(2 * r + s + 1, 0);
    std::queue<int> q;
    q.push(1);
    vis[1] = 1;
    int reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : h_adj[v])
        if (!vis[u]) {
          vis[u] = 1;
          ++reached;
          q.push(u);
        }
    }
    if (reached != r + s) throw Error("cameron_walker: H is disconnected");
  }
  std::vector<Edge> edges(seen.begin(), seen.end());
  for (int i = 1; i <= r; ++i) edges.push_back({i, r + i});
  for (int i = 1; i <= s; ++i) {
    edges.push_back({2 * r + i, 2 * r + s + i});
    edges.push_back({2 * r + i, 2 * r + 2 * s + i});
    edges.push_back({2 * r + s + i, 2 * r + 2 * s + i});
  }
  return Graph(2 * r + 3 * s, std::move(edges));
}

namespace {

struct MatchingSearch {
  const Graph& g;
  std::vector<char> used;
  int best = 0;

  void dfs(int v, int size, int free_count) {
    const int n = g.n();
    while (v <= n && used[v]) ++v;
    if (v > n) {
      best = std::max(best, size);
      return;
    }
    if (size + free_count / 2 <= best) return;
    used[v] = 1;
    for (int u : g.neighbors(v)) {
      if (!used[u]) {
        used[u] = 1;
        dfs(v + 1, size + 1, free_count - 2);
        used[u] = 0;
      }
    }
    dfs(v + 1, size, free_count - 1);
    used[v] = 0;
  }
};

}  // namespace

int matching_number(const Graph& g) {
  MatchingSearch search{g, std::vector<char>(g.n() + 1, 0)};
  // greedy incumbent
  std::vector<char> taken(g.n() + 1, 0);
  for (auto [u, v] : g.edges())
    if (!taken[u] && !taken[v]) {
      taken[u] = taken[v] = 1;
      ++search.best;
    }
  search.dfs(1, 0, g.n());
  return search.best;
}

bool has_perfect_matching(const Graph& g) {
  return g.n() % 2 == 0 && matching_number(g) == g.n() / 2;
}

bool is_hamiltonian(const Graph& g, int max_n) {
  if (g.n() > max_n)
    throw Error("is_hamiltonian: n = " + std::to_string(g.n()) + " exceeds the cap " +
                std::to_string(max_n));
  const int n = g.n();
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) < 2) return false;
  std::vector<char> vis(n + 1, 0);
  vis[1] = 1;
  std::function<bool(int, int)> extend = [&](int v, int len) -> bool {
    if (len == n) return g.has_edge(v, 1);
    for (int u : g.neighbors(v)) {
      if (!vis[u]) {
        vis[u] = 1;
        if (extend(u, len + 1)) return true;
        vis[u] = 0;
      }
    }
    return false;
  };
  return extend(1, 1);
}

Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::complete:
      return complete_graph(spec.n);
    case FamilySpec::Kind::complete_bipartite:
      return complete_bipartite(spec.m, spec.n);
    case FamilySpec::Kind::cycle:
      return cycle_graph(spec.n);
    case FamilySpec::Kind::path:
      return path_graph(spec.n);
    case FamilySpec::Kind::whiskered:
      if (!spec.inner) throw Error("whiskered family needs an inner family");
      return whisker(build_family(*spec.inner));
    case FamilySpec::Kind::cameron_walker:
      return cameron_walker(spec.edges, spec.r, spec.s);
    case FamilySpec::Kind::custom:
      return Graph(spec.custom_n, spec.edges);
  }
  throw Error("unknown family kind");
}

FamilySpec family_complete(int n) {
  FamilySpec f;
  f.kind = FamilySpec::Kind::complete;
  f.n = n;
  f.label = "complete:" + std::to_string(n);
  return f;
}

FamilySpec family_complete_bipartite(int m, int n) {
  FamilySpec f;
  f.kind = FamilySpec::Kind::complete_bipartite;
  f.m = m;
  f.n = n;
  f.label = "kmn:" + std::to_string(m) + "," + std::to_string(n);
  return f;
}

FamilySpec family_cycle(int n) {
  FamilySpec f;
  f.kind = FamilySpec::Kind::cycle;
  f.n = n;
  f.label = "cycle:" + std::to_string(n);
  return f;
}

FamilySpec family_path(int n) {
  FamilySpec f;
  f.kind = FamilySpec::Kind::path;
  f.n = n;
  f.label = "path:" + std::to_string(n);
  return f;
}

FamilySpec family_whisker(FamilySpec inner) {
  FamilySpec f;
  f.kind = FamilySpec::Kind::whiskered;
  f.inner = std::make_shared<const FamilySpec>(std::move(inner));
  f.label = "whisker:(" + f.inner->label + ")";
  return f;
}

FamilySpec family_cameron_walker(std::vector<Edge> h_edges, int r, int s) {
  FamilySpec f;
  f.kind = FamilySpec::Kind::cameron_walker;
  f.r = r;
  f.s = s;
  f.edges = std::move(h_edges);
  f.label = "cmcw:" + std::to_string(r) + "," + std::to_string(s);
  return f;
}

FamilySpec custom_family(std::string label, const Graph& g) {
  FamilySpec f;
  f.kind = FamilySpec::Kind::custom;
  f.custom_n = g.n();
  f.edges = g.edges();
  f.label = std::move(label);
  return f;
}

namespace {

int parse_positive_int(std::string_view s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(std::string(s), &used);
    if (used != s.size() || v < 1) throw std::invalid_argument(std::string(s));
    return v;
  } catch (const std::exception&) {
    throw Error("invalid " + what + " '" + std::string(s) + "'");
  }
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  auto colon = text.find(':');
  std::string kind(text.substr(0, colon == std::string_view::npos ? text.size() : colon));
  std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (kind == "complete") return family_complete(parse_positive_int(args, "complete size"));
  if (kind == "cycle") return family_cycle(parse_positive_int(args, "cycle size"));
  if (kind == "path") return family_path(parse_positive_int(args, "path size"));
  if (kind == "kmn") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos)
      throw Error("kmn family expects kmn:M,N");
    int m = parse_positive_int(args.substr(0, comma), "kmn first part");
    int n = parse_positive_int(args.substr(comma + 1), "kmn second part");
    return family_complete_bipartite(m, n);
  }
  if (kind == "whisker") {
    if (args.size() < 2 || args.front() != '(' || args.back() != ')')
      throw Error("whisker family expects whisker:(inner)");
    return family_whisker(parse_family(args.substr(1, args.size() - 2)));
  }
  if (kind == "cmcw") {
    auto c1 = args.find(',');
    auto c2 = c1 == std::string_view::npos ? std::string_view::npos : args.find(',', c1 + 1);
    if (c2 == std::string_view::npos)
      throw Error("cmcw family expects cmcw:R,S,FILE");
    int r = parse_positive_int(args.substr(0, c1), "cmcw parameter r");
    int s = parse_positive_int(args.substr(c1 + 1, c2 - c1 - 1), "cmcw parameter s");
    std::string file(args.substr(c2 + 1));
    std::ifstream in(file);
    if (!in) throw Error("cannot open graph file '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto [hn, h_edges] = parse_edge_list(buf.str());
    (void)hn;
    return family_cameron_walker(std::move(h_edges), r, s);
  }
  throw Error("unknown family kind '" + kind +
              "' (expected complete, kmn, cycle, path, whisker, cmcw)");
}

}  // namespace polymat
