#include "binedge/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "binedge/errors.hpp"

namespace binedge {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet make_set(std::span<const int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= singleton(v);
  return s;
}

VertexSet make_set(std::initializer_list<int> vs) {
  return make_set(std::span<const int>(vs.begin(), vs.size()));
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw DomainError("graph order must lie in [1, " +
                      std::to_string(kMaxOrder) + "], got " +
                      std::to_string(n));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

VertexSet Graph::vertices() const {
  return ((VertexSet{1} << n_) - 1) << 1;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 1; v <= n_; ++v) twice += degree(v);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > n_ || v > n_) {
    throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} outside [1," + std::to_string(n_) + "]");
  }
  if (u == v) throw DomainError("loop edge at vertex " + std::to_string(u));
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~singleton(v);
  adj_[v] &= ~singleton(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j : members(adj_[i] & ~((VertexSet{2} << i) - 1))) out.emplace_back(i, j);
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> sigma) const {
  Graph h(n_);
  for (auto [u, v] : edges()) h.add_edge(sigma[u], sigma[v]);
  return h;
}

Graph Graph::induced(VertexSet vs) const {
  auto vlist = members(vs & vertices());
  std::vector<int> pos(n_ + 1, 0);
  for (std::size_t i = 0; i < vlist.size(); ++i) pos[vlist[i]] = int(i) + 1;
  Graph h(std::max<int>(1, int(vlist.size())));
  for (auto [u, v] : edges()) {
    if (pos[u] != 0 && pos[v] != 0) h.add_edge(pos[u], pos[v]);
  }
  return h;
}

bool Graph::is_complete_on(VertexSet vs) const {
  for (int v : members(vs)) {
    if ((adj_[v] & vs) != (vs & ~singleton(v))) return false;
  }
  return true;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 2; i <= leaves + 1; ++i) g.add_edge(1, i);
  return g;
}

Graph claw_graph() { return star_graph(3); }

Graph net_graph() {
  return Graph(6, {{1, 2}, {3, 4}, {5, 6}, {2, 3}, {3, 5}, {2, 5}});
}

Graph tent_graph() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5},
                   {1, 6}, {3, 6}});
}

Graph clique_chain(std::span<const int> breakpoints) {
  if (breakpoints.size() < 2 || breakpoints.front() != 1) {
    throw DomainError("clique chain needs breakpoints 1 = a_1 < ... < a_{r+1}");
  }
  Graph g(breakpoints.back());
  for (std::size_t c = 0; c + 1 < breakpoints.size(); ++c) {
    int a = breakpoints[c], b = breakpoints[c + 1];
    if (b <= a) throw DomainError("clique chain breakpoints must increase");
    for (int i = a; i <= b; ++i)
      for (int j = i + 1; j <= b; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph clique_chain(std::initializer_list<int> breakpoints) {
  return clique_chain(std::span<const int>(breakpoints.begin(), breakpoints.size()));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

std::string format_set(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : members(s)) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace binedge
