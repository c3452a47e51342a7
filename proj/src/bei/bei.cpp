#include "binedge/bei.hpp"

#include <algorithm>
#include <functional>

#include "binedge/errors.hpp"

namespace binedge::bei {

using algebra::ModP;
using algebra::Monomial;
using algebra::MonomialIdeal;
using algebra::Rational;

Ring ring_of(const Graph& g) { return algebra::make_ring(g.order()); }

template <class K>
Ideal<K> binomial_edge_ideal(const Graph& g) {
  Ring ring = ring_of(g);
  std::vector<Polynomial<K>> gens;
  for (auto [i, j] : g.edges()) gens.push_back(algebra::minor2<K>(ring, i, j));
  return Ideal<K>(ring, std::move(gens));
}

template <class K>
std::vector<Polynomial<K>> PrimeComponent::generators(const Ring& ring) const {
  std::vector<Polynomial<K>> gens;
  for (int i : members(cut.removed)) {
    gens.push_back(Polynomial<K>::variable(ring.x(i)));
    gens.push_back(Polynomial<K>::variable(ring.y(i)));
  }
  for (VertexSet comp : cut.components) {
    auto vs = members(comp);
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        gens.push_back(algebra::minor2<K>(ring, vs[a], vs[b]));
  }
  return gens;
}

std::vector<PrimeComponent> minimal_primes(const Graph& g) {
  std::vector<PrimeComponent> out;
  for (auto& cs : cut_point_sets(g)) {
    int h = g.order() - cs.count() + set_size(cs.removed);
    out.push_back({std::move(cs), h});
  }
  return out;
}

template <class K>
Ideal<K> prime_ideal(const Graph& g, const PrimeComponent& p) {
  Ring ring = ring_of(g);
  return Ideal<K>(ring, p.generators<K>(ring));
}

bool unmixed(const Graph& g) {
  auto sets = cut_point_sets(g);
  int base = sets.front().count();  // W = empty comes first
  return std::all_of(sets.begin(), sets.end(), [&](const CutSet& cs) {
    return cs.count() - set_size(cs.removed) == base;
  });
}

CmClosedResult cm_closed(const Graph& g) {
  if (!is_closed_labeling(g)) {
    throw DomainError("cm_closed needs a closed labeling; relabel with recognize_closed first");
  }
  CmClosedResult res;
  res.unmixed = unmixed(g);
  std::vector<std::vector<int>> forms;
  bool all_intervals = true;
  for (VertexSet comp : connected_components(g)) {
    // Components of a closed labeling are intervals of consecutive labels.
    int lo = lowest(comp);
    Graph piece = g.induced(comp);
    auto cover = maximal_cliques(piece);
    if (set_size(comp) == 1) {
      forms.push_back({lo});
      continue;
    }
    if (!cover.interval_form) {
      all_intervals = false;
      break;
    }
    std::vector<int> shifted;
    for (int a : *cover.interval_form) shifted.push_back(a + lo - 1);
    forms.push_back(std::move(shifted));
  }
  res.cm = all_intervals;
  if (all_intervals) res.interval_form = std::move(forms);
  return res;
}

// ---------------------------------------------------------------------------

template <class K>
SymbolicPowers<K>::SymbolicPowers(const Graph& g)
    : graph_(g), ring_(ring_of(g)), primes_(minimal_primes(g)), memo_(std::make_shared<Memo>()) {}

template <class K>
Ideal<K> SymbolicPowers<K>::prime_power(std::size_t index, int k) const {
  if (k < 1) throw DomainError("symbolic powers need k >= 1");
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->powers.find({index, k});
    if (it != memo_->powers.end()) return it->second;
  }
  Ideal<K> p(ring_, primes_.at(index).template generators<K>(ring_));
  Ideal<K> pk = k == 1 ? p : algebra::power(p, k);
  std::lock_guard lock(memo_->mutex);
  return memo_->powers.emplace(std::make_pair(index, k), pk).first->second;
}

template <class K>
bool SymbolicPowers<K>::contains(const Polynomial<K>& f, int k) const {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!prime_power(i, k).contains(f)) return false;
  }
  return true;
}

template <class K>
Ideal<K> SymbolicPowers<K>::symbolic_power(int k) const {
  std::vector<Ideal<K>> parts;
  for (std::size_t i = 0; i < primes_.size(); ++i) parts.push_back(prime_power(i, k));
  return algebra::intersection(std::span<const Ideal<K>>(parts));
}

template <class K>
bool symbolic_power_membership(const Polynomial<K>& f, const Graph& g, int k) {
  return SymbolicPowers<K>(g).contains(f, k);
}

template <class K>
bool symbolic_equals_ordinary(const Graph& g, int k, const SymbolicBudget& budget) {
  if (g.order() > budget.max_n || k > budget.max_k) {
    throw CapacityError("symbolic power comparison budget is n <= " +
                        std::to_string(budget.max_n) + ", k <= " +
                        std::to_string(budget.max_k) + "; got n = " +
                        std::to_string(g.order()) + ", k = " + std::to_string(k));
  }
  Ideal<K> j = binomial_edge_ideal<K>(g);
  if (j.generators().empty()) return true;
  Ideal<K> ordinary = k == 1 ? j : algebra::power(j, k);
  // J^k is always contained in J^(k); equality needs the reverse inclusion.
  Ideal<K> symbolic = SymbolicPowers<K>(g).symbolic_power(k);
  return ordinary == symbolic;
}

template <class K>
Polynomial<K> net_witness_family(const Graph& g, std::span<const int> map, int k) {
  if (k < 2) throw DomainError("the net witness family starts at k = 2");
  if (!is_induced_embedding(g, net_graph(), map)) {
    throw DomainError("map is not an induced embedding of the net");
  }
  Ring ring = ring_of(g);
  auto x = [&](int i) { return Monomial::variable(ring.x(map[i])); };
  auto y = [&](int i) { return Monomial::variable(ring.y(map[i])); };
  // Sign, x-indices, y-indices of each of the six terms.
  struct Spec {
    int sign;
    int xs[3];
    int ys[3];
  };
  static constexpr Spec kSpec[] = {
      {+1, {3, 5, 6}, {1, 2, 4}}, {-1, {1, 5, 6}, {2, 3, 4}}, {-1, {3, 4, 5}, {1, 2, 6}},
      {+1, {1, 2, 5}, {3, 4, 6}}, {+1, {1, 3, 4}, {2, 5, 6}}, {-1, {1, 2, 3}, {4, 5, 6}},
  };
  std::vector<algebra::Term<K>> terms;
  for (const auto& s : kSpec) {
    Monomial m;
    for (int i : s.xs) m = m * x(i);
    for (int i : s.ys) m = m * y(i);
    terms.push_back({m, K(s.sign)});
  }
  Polynomial<K> w = Polynomial<K>::from_terms(std::move(terms));
  if (k > 2) {
    Polynomial<K> f = Polynomial<K>::from_terms({{x(2) * y(3), K(1)}, {x(3) * y(2), K(-1)}});
    w = w * f.pow(k - 2);
  }
  return w;
}

// ---------------------------------------------------------------------------

MonomialIdeal BipartiteInitialGraph::edge_ideal() const {
  Ring ring = algebra::make_ring(n);
  std::vector<Monomial> gens;
  for (auto [i, j] : edges)
    gens.push_back(Monomial::variable(ring.x(i)) * Monomial::variable(ring.y(j)));
  return MonomialIdeal(ring, std::move(gens));
}

bool BipartiteInitialGraph::x_isolated(int i) const {
  return std::none_of(edges.begin(), edges.end(), [i](auto e) { return e.first == i; });
}

bool BipartiteInitialGraph::y_isolated(int j) const {
  return std::none_of(edges.begin(), edges.end(), [j](auto e) { return e.second == j; });
}

BipartiteInitialGraph initial_bipartite_graph(const Graph& g) {
  if (!is_closed_labeling(g)) {
    throw DomainError("initial_bipartite_graph needs a closed labeling");
  }
  BipartiteInitialGraph h;
  h.n = g.order();
  h.edges = g.edges();
  return h;
}

int induced_matching_number(const BipartiteInitialGraph& h, int edge_bound) {
  int m = static_cast<int>(h.edges.size());
  if (m > edge_bound) {
    throw CapacityError("induced matching search is exhaustive; " + std::to_string(m) +
                        " edges exceed the bound " + std::to_string(edge_bound));
  }
  auto adjacent = [&](int xi, int yj) {
    return std::find(h.edges.begin(), h.edges.end(), std::make_pair(xi, yj)) != h.edges.end();
  };
  // compatible[a] has bit b iff edges a and b can share an induced matching.
  std::vector<std::uint64_t> compatible(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      auto [p, q] = h.edges[a];
      auto [r, s] = h.edges[b];
      if (a == b || p == r || q == s) continue;
      if (adjacent(p, s) || adjacent(r, q)) continue;
      compatible[a] |= std::uint64_t{1} << b;
    }
  }
  int best = 0;
  std::function<void(std::uint64_t, int)> grow = [&](std::uint64_t candidates, int size) {
    best = std::max(best, size);
    if (size + std::popcount(candidates) <= best) return;
    while (candidates != 0) {
      int a = std::countr_zero(candidates);
      candidates &= candidates - 1;
      grow(candidates & compatible[a], size + 1);
      if (size + 1 + std::popcount(candidates) <= best) return;
    }
  };
  grow(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1, 0);
  return best;
}

#define BINEDGE_INSTANTIATE(K)                                                            \
  template Ideal<K> binomial_edge_ideal(const Graph&);                                    \
  template std::vector<Polynomial<K>> PrimeComponent::generators(const Ring&) const;      \
  template Ideal<K> prime_ideal(const Graph&, const PrimeComponent&);                     \
  template class SymbolicPowers<K>;                                                       \
  template bool symbolic_power_membership(const Polynomial<K>&, const Graph&, int);       \
  template bool symbolic_equals_ordinary<K>(const Graph&, int, const SymbolicBudget&);    \
  template Polynomial<K> net_witness_family(const Graph&, std::span<const int>, int);

BINEDGE_INSTANTIATE(ModP)
BINEDGE_INSTANTIATE(Rational)

#undef BINEDGE_INSTANTIATE

}  // namespace binedge::bei
