#include <algorithm>
#include <functional>
#include <numeric>

#include "binedge/errors.hpp"
#include "binedge/graph.hpp"

namespace binedge {

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    VertexSet comp = singleton(lowest(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

int component_count(const Graph& g, VertexSet within) {
  return static_cast<int>(connected_components(g, within).size());
}

bool is_connected(const Graph& g) { return component_count(g, g.vertices()) == 1; }

// ---------------------------------------------------------------------------
// Chordality

bool is_perfect_elimination_order(const Graph& g, std::span<const int> order) {
  VertexSet later = g.vertices();
  for (int v : order) {
    later &= ~singleton(v);
    if (!g.is_complete_on(g.neighbors(v) & later)) return false;
  }
  return true;
}

namespace {

// Maximum cardinality search; the reverse of the visit order is a perfect
// elimination ordering exactly when g is chordal.
std::vector<int> mcs_elimination_order(const Graph& g) {
  int n = g.order();
  std::vector<int> weight(n + 1, 0);
  VertexSet unvisited = g.vertices();
  std::vector<int> visit;
  visit.reserve(n);
  while (unvisited != 0) {
    int best = -1;
    for (int v : members(unvisited)) {
      if (best < 0 || weight[v] > weight[best]) best = v;
    }
    visit.push_back(best);
    unvisited &= ~singleton(best);
    for (int u : members(g.neighbors(best) & unvisited)) ++weight[u];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

// Shortest path from a to b inside `allowed` (both endpoints included).
std::vector<int> shortest_path(const Graph& g, int a, int b, VertexSet allowed) {
  std::vector<int> parent(g.order() + 1, 0);
  VertexSet seen = singleton(a);
  std::vector<int> queue{a};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    if (v == b) break;
    for (int u : members(g.neighbors(v) & allowed & ~seen)) {
      seen |= singleton(u);
      parent[u] = v;
      queue.push_back(u);
    }
  }
  if (!contains(seen, b)) return {};
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult res;
  auto order = mcs_elimination_order(g);
  if (is_perfect_elimination_order(g, order)) {
    res.chordal = true;
    res.elimination_order = std::move(order);
    return res;
  }
  // Any hole passes through some v with non-adjacent neighbours a, b joined
  // by a path avoiding the rest of N[v]; a shortest such path closes a hole.
  for (int v = 1; v <= g.order(); ++v) {
    VertexSet nv = g.neighbors(v);
    for (int a : members(nv)) {
      for (int b : members(nv & ~((VertexSet{2} << a) - 1))) {
        if (g.adjacent(a, b)) continue;
        VertexSet allowed = (g.vertices() & ~nv & ~singleton(v)) | singleton(a) | singleton(b);
        auto path = shortest_path(g, a, b, allowed);
        if (path.empty()) continue;
        res.hole = {v};
        res.hole.insert(res.hole.end(), path.begin(), path.end());
        return res;
      }
    }
  }
  throw std::logic_error("elimination order failed but no hole was found");
}

// ---------------------------------------------------------------------------
// Cliques

CliqueCover maximal_cliques(const Graph& g) {
  CliqueCover cover;
  std::function<void(VertexSet, VertexSet, VertexSet)> expand =
      [&](VertexSet r, VertexSet p, VertexSet x) {
        if (p == 0 && x == 0) {
          cover.cliques.push_back(r);
          return;
        }
        VertexSet px = p | x;
        int pivot = lowest(px);
        int best = -1;
        for (int u : members(px)) {
          int c = set_size(p & g.neighbors(u));
          if (c > best) { best = c; pivot = u; }
        }
        for (int v : members(p & ~g.neighbors(pivot))) {
          expand(r | singleton(v), p & g.neighbors(v), x & g.neighbors(v));
          p &= ~singleton(v);
          x |= singleton(v);
        }
      };
  expand(0, g.vertices(), 0);
  std::sort(cover.cliques.begin(), cover.cliques.end(), [](VertexSet a, VertexSet b) {
    if (set_size(a) != set_size(b)) return set_size(a) > set_size(b);
    return members(a) < members(b);
  });

  // Interval form: every clique is an interval and consecutive intervals
  // share exactly their endpoint.
  std::vector<std::pair<int, int>> spans;
  bool intervals = true;
  for (VertexSet c : cover.cliques) {
    int lo = lowest(c), hi = 63 - std::countl_zero(c);
    VertexSet range = ((VertexSet{2} << hi) - 1) & ~((VertexSet{1} << lo) - 1);
    if (range != c) { intervals = false; break; }
    spans.emplace_back(lo, hi);
  }
  if (intervals && !spans.empty()) {
    std::sort(spans.begin(), spans.end());
    std::vector<int> a{spans.front().first};
    bool chain = a.front() == 1;
    for (std::size_t i = 0; chain && i < spans.size(); ++i) {
      if (spans[i].first != a.back() || spans[i].second <= spans[i].first) chain = false;
      a.push_back(spans[i].second);
    }
    if (chain && a.back() == g.order()) cover.interval_form = std::move(a);
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Induced pattern search

bool is_induced_embedding(const Graph& g, const Graph& pattern,
                          std::span<const int> map) {
  int k = pattern.order();
  if (static_cast<int>(map.size()) != k + 1) return false;
  VertexSet used = 0;
  for (int i = 1; i <= k; ++i) {
    if (map[i] < 1 || map[i] > g.order() || contains(used, map[i])) return false;
    used |= singleton(map[i]);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (pattern.adjacent(i, j) != g.adjacent(map[i], map[j])) return false;
  return true;
}

std::optional<std::vector<int>> find_induced_subgraph(const Graph& g,
                                                      const Graph& pattern) {
  int k = pattern.order();
  if (k > g.order()) return std::nullopt;
  std::vector<int> map(k + 1, 0);
  std::function<bool(int, VertexSet)> place = [&](int i, VertexSet used) {
    if (i > k) return true;
    for (int v = 1; v <= g.order(); ++v) {
      if (contains(used, v)) continue;
      bool ok = true;
      for (int j = 1; j < i && ok; ++j) {
        ok = pattern.adjacent(i, j) == g.adjacent(v, map[j]);
      }
      if (!ok) continue;
      map[i] = v;
      if (place(i + 1, used | singleton(v))) return true;
    }
    return false;
  };
  if (place(1, 0)) return map;
  return std::nullopt;
}

ForbiddenScan forbidden_subgraph_scan(const Graph& g) {
  return {find_induced_subgraph(g, claw_graph()), find_induced_subgraph(g, net_graph()),
          find_induced_subgraph(g, tent_graph())};
}

// ---------------------------------------------------------------------------
// Cut-point sets

bool is_cut_point_set(const Graph& g, VertexSet w) {
  VertexSet rest = g.vertices() & ~w;
  int c = component_count(g, rest);
  for (int i : members(w)) {
    if (component_count(g, rest | singleton(i)) >= c) return false;
  }
  return true;
}

std::vector<CutSet> cut_point_sets(const Graph& g) {
  int n = g.order();
  if (n > kMaxCutSetOrder) {
    throw CapacityError("cut_point_sets enumerates 2^n subsets; n = " +
                        std::to_string(n) + " exceeds " + std::to_string(kMaxCutSetOrder));
  }
  std::vector<CutSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet w = bits << 1;
    if (!is_cut_point_set(g, w)) continue;
    out.push_back({w, connected_components(g, g.vertices() & ~w)});
  }
  std::sort(out.begin(), out.end(), [](const CutSet& a, const CutSet& b) {
    if (set_size(a.removed) != set_size(b.removed))
      return set_size(a.removed) < set_size(b.removed);
    return members(a.removed) < members(b.removed);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Longest induced path

int longest_induced_path(const Graph& g, int bound) {
  if (g.order() > bound) {
    throw CapacityError("longest_induced_path is exhaustive; n = " +
                        std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(bound));
  }
  int best = 0;
  // `blocked` holds the path and every neighbour of its non-terminal vertices.
  std::function<void(int, VertexSet, int)> extend = [&](int end, VertexSet blocked,
                                                        int length) {
    best = std::max(best, length);
    VertexSet nb = g.neighbors(end);
    for (int u : members(nb & ~blocked)) {
      extend(u, blocked | nb | singleton(u), length + 1);
    }
  };
  for (int v = 1; v <= g.order(); ++v) extend(v, singleton(v), 0);
  return best;
}

// ---------------------------------------------------------------------------
// Indecomposable components

namespace {

// A split vertex of the induced piece: removing it leaves exactly two
// components inside the piece, each meeting N(v) in a clique.
std::optional<std::pair<VertexSet, VertexSet>> find_split(const Graph& g, VertexSet piece) {
  for (int v : members(piece)) {
    auto parts = connected_components(g, piece & ~singleton(v));
    if (parts.size() != 2) continue;
    VertexSet nv = g.neighbors(v);
    if (g.is_complete_on(nv & parts[0]) && g.is_complete_on(nv & parts[1])) {
      return std::make_pair(parts[0] | singleton(v), parts[1] | singleton(v));
    }
  }
  return std::nullopt;
}

}  // namespace

Decomposition indecomposable_components(const Graph& g) {
  Decomposition d;
  std::vector<VertexSet> work;
  for (VertexSet comp : connected_components(g)) {
    if (set_size(comp) >= 2) work.push_back(comp);
  }
  while (!work.empty()) {
    VertexSet piece = work.back();
    work.pop_back();
    if (auto split = find_split(g, piece)) {
      work.push_back(split->first);
      work.push_back(split->second);
    } else {
      d.pieces.push_back(piece);
    }
  }
  std::sort(d.pieces.begin(), d.pieces.end(),
            [](VertexSet a, VertexSet b) { return members(a) < members(b); });
  d.count = static_cast<int>(d.pieces.size());
  return d;
}

// ---------------------------------------------------------------------------
// Blocks

std::vector<VertexSet> biconnected_components(const Graph& g) {
  int n = g.order();
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = ++timer;
    for (int u : members(g.neighbors(v))) {
      if (u == parent) continue;
      if (disc[u] == 0) {
        stack.emplace_back(v, u);
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          VertexSet block = 0;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block |= singleton(a) | singleton(b);
            if (a == v && b == u) break;
          }
          blocks.push_back(block);
        }
      } else if (disc[u] < disc[v]) {
        stack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (int v = 1; v <= n; ++v) {
    if (disc[v] != 0) continue;
    if (g.degree(v) == 0) {
      disc[v] = ++timer;
      blocks.push_back(singleton(v));
      continue;
    }
    dfs(v, 0);
  }
  std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) {
    if (set_size(a) != set_size(b)) return set_size(a) > set_size(b);
    return members(a) < members(b);
  });
  return blocks;
}

BlockClassification classify_block_graph(const Graph& g) {
  BlockClassification res;
  res.blocks = biconnected_components(g);
  res.is_block = std::all_of(res.blocks.begin(), res.blocks.end(),
                             [&](VertexSet b) { return g.is_complete_on(b); });
  if (res.is_block) {
    auto cliques = maximal_cliques(g).cliques;
    res.cm_by_vertex_rule = true;
    for (int v = 1; v <= g.order(); ++v) {
      int count = static_cast<int>(std::count_if(
          cliques.begin(), cliques.end(), [v](VertexSet c) { return contains(c, v); }));
      if (count >= 3) res.cm_by_vertex_rule = false;
    }
  }
  return res;
}

}  // namespace binedge
