#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "binedge/algebra/ideal.hpp"
#include "binedge/graph.hpp"

namespace binedge::bei {

using algebra::Ideal;
using algebra::Polynomial;
using algebra::Ring;

Ring ring_of(const Graph& g);

// Generators f_ij = x_i y_j - x_j y_i over the sorted edges {i,j}, i < j.
template <class K>
Ideal<K> binomial_edge_ideal(const Graph& g);

// P_W(G): the variables of W plus the 2-minors of each completed component
// of G restricted to [n] \ W.
struct PrimeComponent {
  CutSet cut;
  int height = 0;  // n - c(W) + |W|

  template <class K>
  std::vector<Polynomial<K>> generators(const Ring& ring) const;
};

// One component per cut-point set, in cut_point_sets order.
std::vector<PrimeComponent> minimal_primes(const Graph& g);

template <class K>
Ideal<K> prime_ideal(const Graph& g, const PrimeComponent& p);

// n + c(W) - |W| is constant over the cut-point sets.
bool unmixed(const Graph& g);

struct CmClosedResult {
  bool unmixed = false;
  bool cm = false;
  // Per connected component, breakpoints a_1 < ... < a_{r+1} in the
  // graph's own labels, when every component is in interval form.
  std::optional<std::vector<std::vector<int>>> interval_form;
};
// Requires the given labeling to be closed; throws DomainError otherwise.
CmClosedResult cm_closed(const Graph& g);

struct SymbolicBudget {
  int max_n = 6;
  int max_k = 2;
};

// Memoized P_W(G)^k over the minimal primes of J_G.
template <class K>
class SymbolicPowers {
 public:
  explicit SymbolicPowers(const Graph& g);

  const Graph& graph() const { return graph_; }
  const std::vector<PrimeComponent>& primes() const { return primes_; }

  // P_W^k for the prime at `index`, computed once per (W, k).
  Ideal<K> prime_power(std::size_t index, int k) const;
  // f is in P_W^k for every cut-point set W.
  bool contains(const Polynomial<K>& f, int k) const;
  // Intersection of all P_W^k.
  Ideal<K> symbolic_power(int k) const;

 private:
  Graph graph_;
  Ring ring_;
  std::vector<PrimeComponent> primes_;
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<std::size_t, int>, Ideal<K>> powers;
  };
  std::shared_ptr<Memo> memo_;
};

template <class K>
bool symbolic_power_membership(const Polynomial<K>& f, const Graph& g, int k);

// J_G^k == J_G^(k) by reduced-basis equality; throws CapacityError outside
// the budget.
template <class K>
bool symbolic_equals_ordinary(const Graph& g, int k, const SymbolicBudget& budget = {});

// The six-term witness g on the net, with net vertex i sent to map[i]
// (map[0] unused), times (x_{map 2} y_{map 3} - x_{map 3} y_{map 2})^(k-2).
// Throws DomainError unless map is an induced net embedding and k >= 2.
template <class K>
Polynomial<K> net_witness_family(const Graph& g, std::span<const int> map, int k);

// Bipartite graph H on {x_i} and {y_j} with an edge {x_i, y_j} for each edge
// {i, j} of G, i < j. Its edge ideal is in(J_G) for closed labelings.
struct BipartiteInitialGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (i, j): x_i ~ y_j

  algebra::MonomialIdeal edge_ideal() const;
  bool x_isolated(int i) const;
  bool y_isolated(int j) const;
};
// Requires a closed labeling; throws DomainError otherwise.
BipartiteInitialGraph initial_bipartite_graph(const Graph& g);

inline constexpr int kInducedMatchingEdgeBound = 40;
int induced_matching_number(const BipartiteInitialGraph& h,
                            int edge_bound = kInducedMatchingEdgeBound);

}  // namespace binedge::bei
