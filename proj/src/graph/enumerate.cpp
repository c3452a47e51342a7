#include <algorithm>
#include <numeric>
#include <set>

#include "binedge/errors.hpp"
#include "binedge/graph.hpp"

namespace binedge {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_of_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = pair_count(n) - 1;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i, --bit)
      if ((code >> bit) & 1U) g.add_edge(i, j);
  return g;
}

// Branch and bound over the placement order. Placing the vertex for new label
// j fixes column j of the code, so a partial code already above the best
// prefix can be discarded.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    best_columns_.assign(n_ + 1, ~std::uint64_t{0});
    placed_.assign(n_ + 1, 0);
    columns_.assign(n_ + 1, 0);
  }

  void run() {
    if (n_ > 0) search(1);
  }

  std::uint64_t code() const {
    std::uint64_t code = 0;
    for (int j = 2; j <= n_; ++j) code = (code << (j - 1)) | best_columns_[j];
    return code;
  }
  const std::vector<int>& order() const { return best_order_; }

 private:
  // Sign of columns_[2..j] against the best code's prefix. The best code
  // changes during the search, so this is recomputed rather than inherited.
  int compare_prefix(int j) const {
    for (int c = 2; c <= j; ++c)
      if (columns_[c] != best_columns_[c]) return columns_[c] < best_columns_[c] ? -1 : 1;
    return 0;
  }

  void search(int j) {
    if (j > n_) {
      if (best_order_.empty() || compare_prefix(n_) < 0) {
        best_columns_ = columns_;
        best_order_ = placed_;
      }
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_ & singleton(v)) continue;
      std::uint64_t column = 0;
      for (int i = 1; i < j; ++i) column = (column << 1) | (g_.adjacent(placed_[i], v) ? 1U : 0U);
      placed_[j] = v;
      columns_[j] = column;
      if (!best_order_.empty() && compare_prefix(j) > 0) continue;
      used_ |= singleton(v);
      search(j + 1);
      used_ &= ~singleton(v);
    }
  }

  const Graph& g_;
  int n_;
  VertexSet used_ = 0;
  std::vector<int> placed_;  // placed_[j] is the vertex given label j
  std::vector<std::uint64_t> columns_, best_columns_;
  std::vector<int> best_order_;
};

CanonicalSearch searched(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw CapacityError("canonical form is limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  CanonicalSearch search(g);
  search.run();
  return search;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return {g.order(), searched(g).code()}; }

std::vector<int> canonical_labeling(const Graph& g) {
  auto search = searched(g);
  std::vector<int> sigma(g.order() + 1, 0);
  for (int j = 1; j <= g.order(); ++j) sigma[search.order()[j]] = j;
  return sigma;
}

Graph from_canonical(const CanonicalForm& form) { return graph_of_code(form.order, form.code); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only) {
  if (n < 1) throw DomainError("graphs need at least one vertex");
  if (n > kMaxCanonicalOrder) {
    throw CapacityError("isomorphism classes are enumerated up to " + std::to_string(kMaxCanonicalOrder) +
                        " vertices");
  }
  // Every class on n vertices loses its last vertex to some class on n - 1,
  // so augmenting all classes without the connectivity filter is complete.
  std::set<std::uint64_t> level{0};
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph base = graph_of_code(m - 1, code);
      for (VertexSet nbrs = 0; nbrs < (VertexSet{1} << (m - 1)); ++nbrs) {
        Graph g(m);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int v = 1; v < m; ++v)
          if ((nbrs >> (v - 1)) & 1U) g.add_edge(v, m);
        next.insert(canonical_form(g).code);
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    Graph g = graph_of_code(n, code);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> labeled_graphs(int n, bool connected_only) {
  if (n < 1) throw DomainError("graphs need at least one vertex");
  if (n > kMaxLabeledOrder) {
    throw CapacityError("labeled enumeration is limited to " + std::to_string(kMaxLabeledOrder) + " vertices");
  }
  std::vector<Graph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
    Graph g = graph_of_code(n, code);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> closed_labeled_graphs(int n) {
  if (n < 1) throw DomainError("graphs need at least one vertex");
  std::vector<Graph> out;
  std::vector<int> reach(n + 1);
  auto rec = [&](auto&& self, int i, int floor) -> void {
    if (i > n) {
      Graph g(n);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= reach[a]; ++b) g.add_edge(a, b);
      out.push_back(std::move(g));
      return;
    }
    for (int v = std::max(floor, i); v <= n; ++v) {
      reach[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 1, 1);
  return out;
}

}  // namespace binedge
