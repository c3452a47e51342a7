#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binedge {

// Vertex sets are bitmasks: bit v is set iff vertex v (1-based) is a member.
using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
inline constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

// Members of s in increasing order.
std::vector<int> members(VertexSet s);
VertexSet make_set(std::span<const int> vs);
VertexSet make_set(std::initializer_list<int> vs);

// Simple undirected graph on the vertex set [n] = {1, ..., n}.
class Graph {
 public:
  static constexpr int kMaxOrder = 63;

  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  VertexSet vertices() const;
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return set_size(adj_[v]); }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Edges {i,j} with i < j, sorted lexicographically.
  std::vector<Edge> edges() const;

  // sigma[v] is the new label of vertex v; sigma[0] is ignored.
  Graph relabeled(std::span<const int> sigma) const;

  // Induced subgraph on vs, relabeled to 1..|vs| preserving the relative order.
  Graph induced(VertexSet vs) const;

  bool is_complete_on(VertexSet vs) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::array<VertexSet, kMaxOrder + 1> adj_{};
};

// Named graphs used throughout tests, reports and the enumeration harness.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph claw_graph();  // center 1, leaves 2,3,4
Graph net_graph();   // triangle {2,3,5} with pendants 1-2, 4-3, 6-5
Graph tent_graph();  // triangle {1,2,3}; 4 ~ {1,2}, 5 ~ {2,3}, 6 ~ {1,3}
// Chain of cliques [a_1,a_2], [a_2,a_3], ... on [a_1, a_last]. Requires a_1 = 1.
Graph clique_chain(std::span<const int> breakpoints);
Graph clique_chain(std::initializer_list<int> breakpoints);
Graph disjoint_union(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------------
// Text formats

// Edge list ("i j" per line, '#' comments) or a single graph6 record.
// The edge-list reader also honours a "# n=K" comment fixing the order.
Graph parse_graph(std::string_view text);
Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view text);
std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);

// ---------------------------------------------------------------------------
// Structure

// Components of the subgraph induced on `within`, each as a vertex set,
// ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
std::vector<VertexSet> connected_components(const Graph& g);
int component_count(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  std::vector<int> elimination_order;  // perfect elimination ordering if chordal
  std::vector<int> hole;               // induced cycle of length >= 4 otherwise
};
ChordalityResult is_chordal(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const int> order);

struct CliqueCover {
  std::vector<VertexSet> cliques;
  // Breakpoints a_1 < ... < a_{r+1} when clique i is [a_i, a_{i+1}].
  std::optional<std::vector<int>> interval_form;
};
// Inclusion-maximal cliques, sorted by size (descending) then lexicographically.
// Isolated vertices contribute the singleton clique.
CliqueCover maximal_cliques(const Graph& g);

// Induced-subgraph embedding of `pattern` into g: map[i] is the image of
// pattern vertex i (map[0] unused). Returns the lexicographically first one.
std::optional<std::vector<int>> find_induced_subgraph(const Graph& g,
                                                      const Graph& pattern);
bool is_induced_embedding(const Graph& g, const Graph& pattern,
                          std::span<const int> map);

struct ForbiddenScan {
  std::optional<std::vector<int>> claw;
  std::optional<std::vector<int>> net;
  std::optional<std::vector<int>> tent;
};
ForbiddenScan forbidden_subgraph_scan(const Graph& g);

// Condition: for all i < j < k, {i,k} in E implies {i,j}, {j,k} in E.
bool is_closed_labeling(const Graph& g);
// Relabeling sigma (sigma[v] = new label) making g closed, if one exists.
std::optional<std::vector<int>> recognize_closed(const Graph& g);

struct CutSet {
  VertexSet removed = 0;               // W
  std::vector<VertexSet> components;   // components of G restricted to [n] \ W
  int count() const { return static_cast<int>(components.size()); }
};
inline constexpr int kMaxCutSetOrder = 20;
// All W (including the empty set) with c(W \ {i}) < c(W) for every i in W,
// sorted by |W| and then lexicographically.
std::vector<CutSet> cut_point_sets(const Graph& g);
bool is_cut_point_set(const Graph& g, VertexSet w);

inline constexpr int kDefaultInducedPathBound = 12;
// Number of edges of a longest induced path.
int longest_induced_path(const Graph& g, int bound = kDefaultInducedPathBound);

struct Decomposition {
  int count = 0;
  std::vector<VertexSet> pieces;
};
// Splits g at free cut vertices. Isolated vertices contribute no piece.
Decomposition indecomposable_components(const Graph& g);

struct BlockClassification {
  bool is_block = false;
  std::vector<VertexSet> blocks;
  bool cm_by_vertex_rule = false;
};
std::vector<VertexSet> biconnected_components(const Graph& g);
BlockClassification classify_block_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Enumeration and canonical forms

// Adjacency bits in graph6 order ({1,2}, {1,3}, {2,3}, {1,4}, ...), read with
// the first pair as the most significant bit.
struct CanonicalForm {
  int order = 0;
  std::uint64_t code = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};
inline constexpr int kMaxCanonicalOrder = 8;
// Minimum code over all relabelings, by branch and bound on the columns.
// Throws CapacityError past kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
// sigma with g.relabeled(sigma) the graph of canonical_form(g).
std::vector<int> canonical_labeling(const Graph& g);
Graph from_canonical(const CanonicalForm& form);
bool isomorphic(const Graph& a, const Graph& b);

// One canonical representative per isomorphism class on n vertices, sorted by
// code. Built by vertex augmentation from the classes on n - 1 vertices.
std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only);
inline constexpr int kMaxLabeledOrder = 7;
// All 2^(n(n-1)/2) labeled graphs on [n], in code order.
std::vector<Graph> labeled_graphs(int n, bool connected_only);
// Graphs whose identity labeling is closed: N+(i) = [i+1, m(i)] with m
// non-decreasing and m(i) >= i, so there are Catalan(n) of them.
std::vector<Graph> closed_labeled_graphs(int n);

std::string format_set(VertexSet s);

}  // namespace binedge
