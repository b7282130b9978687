#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polymat {

// Every engine failure (syntax error, invariant violation, size cap) is
// reported as an Error carrying a human-readable message.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unordered edge {i, j}, stored with i < j. Vertices are 1-indexed.
using Edge = std::pair<int, int>;

// Finite simple graph on vertices 1..n: no loops, no parallel edges, no
// isolated vertices, and n >= 3. Immutable after construction, so all
// queries are safe to call concurrently.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

  bool is_connected() const;
  bool is_bipartite() const;
  bool is_regular() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted lexicographically
  std::vector<std::vector<int>> adj_;  // adj_[v-1], sorted ascending
};

// Text format: the first non-comment line is the vertex count, every later
// non-comment line is one edge "i j". '#' starts a comment, blank lines are
// ignored. Serialization emits edges in lexicographic order.
Graph parse_graph(std::string_view text);
std::string serialize(const Graph& g);

// Relaxed reader for auxiliary edge lists (e.g. the inner bipartite graph
// of a Cameron-Walker construction): syntax, label-range, loop and
// duplicate checks only; isolated vertices are allowed.
std::pair<int, std::vector<Edge>> parse_edge_list(std::string_view text);

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);  // parts {1..m} and {m+1..m+n}
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph cube_graph();      // the 3-regular bipartite graph of the 3-cube
Graph petersen_graph();

// W(g): g plus one pendant edge {i, n+i} at every vertex.
Graph whisker(const Graph& g);

// H_s^r on 2r+3s vertices: h joins {1..r} to {2r+1..2r+s}, must be
// connected and touch every vertex of both blocks. Pendant edges {i, r+i}
// for i <= r, pendant triangles on {2r+i, 2r+s+i, 2r+2s+i} for i <= s.
Graph cameron_walker(const std::vector<Edge>& h_edges, int r, int s);

// Exact maximum matching by branch and bound with a greedy incumbent.
int matching_number(const Graph& g);
bool has_perfect_matching(const Graph& g);
// Exhaustive spanning-cycle search; refuses n > max_n.
bool is_hamiltonian(const Graph& g, int max_n = 16);

// Family mini-language: complete:N, kmn:M,N, cycle:N, path:N,
// whisker:(inner), cmcw:R,S,FILE. Custom graphs are built in code.
struct FamilySpec {
  enum class Kind {
    complete,
    complete_bipartite,
    cycle,
    path,
    whiskered,
    cameron_walker,
    custom,
  };
  Kind kind = Kind::custom;
  int n = 0;     // complete/cycle/path size; kmn second part
  int m = 0;     // kmn first part
  int r = 0;     // cameron_walker
  int s = 0;     // cameron_walker
  std::vector<Edge> edges;  // cameron_walker H, or custom edge list
  int custom_n = 0;
  std::string label;
  std::shared_ptr<const FamilySpec> inner;  // whiskered
};

Graph build_family(const FamilySpec& spec);
FamilySpec parse_family(std::string_view text);

FamilySpec family_complete(int n);
FamilySpec family_complete_bipartite(int m, int n);
FamilySpec family_cycle(int n);
FamilySpec family_path(int n);
FamilySpec family_whisker(FamilySpec inner);
FamilySpec family_cameron_walker(std::vector<Edge> h_edges, int r, int s);
FamilySpec custom_family(std::string label, const Graph& g);

}  // namespace polymat
