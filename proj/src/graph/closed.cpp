#include <algorithm>

#include "binedge/graph.hpp"

namespace binedge {

bool is_closed_labeling(const Graph& g) {
  int n = g.order();
  for (int i = 1; i <= n; ++i) {
    for (int k : members(g.neighbors(i))) {
      if (k <= i + 1) continue;
      for (int j = i + 1; j < k; ++j) {
        if (!g.adjacent(i, j) || !g.adjacent(j, k)) return false;
      }
    }
  }
  return true;
}

namespace {

// Lexicographic BFS restricted to `comp`. With a previous ordering, ties go
// to the vertex appearing last in it (the "+" rule).
std::vector<int> lex_bfs(const Graph& g, VertexSet comp, const std::vector<int>& previous) {
  int n = g.order();
  std::vector<int> rank(n + 1, 0);
  for (std::size_t p = 0; p < previous.size(); ++p) rank[previous[p]] = int(p) + 1;

  std::vector<std::vector<int>> label(n + 1);
  VertexSet left = comp;
  std::vector<int> order;
  int step = set_size(comp);
  while (left != 0) {
    int best = -1;
    for (int v : members(left)) {
      if (best < 0) { best = v; continue; }
      if (label[v] > label[best] || (label[v] == label[best] && rank[v] > rank[best])) {
        best = v;
      }
    }
    order.push_back(best);
    left &= ~singleton(best);
    for (int u : members(g.neighbors(best) & left)) label[u].push_back(step);
    --step;
  }
  return order;
}

}  // namespace

std::optional<std::vector<int>> recognize_closed(const Graph& g) {
  int n = g.order();
  std::vector<int> sigma(n + 1, 0);
  int next = 1;
  for (VertexSet comp : connected_components(g)) {
    auto s1 = lex_bfs(g, comp, {});
    auto s2 = lex_bfs(g, comp, s1);
    auto s3 = lex_bfs(g, comp, s2);
    for (int v : s3) sigma[v] = next++;
  }
  if (!is_closed_labeling(g.relabeled(sigma))) return std::nullopt;
  return sigma;
}

}  // namespace binedge
