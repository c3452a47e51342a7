#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "binedge/algebra/monomial_ideal.hpp"
#include "binedge/graph.hpp"

// Closed-form invariants of binomial edge ideals of closed graphs. Everything
// here is graph combinatorics; nothing calls into the Betti oracle.
namespace binedge::formulas {

struct DepthProfile {
  std::string graph;     // graph6
  int c = 0;             // connected components, isolated vertices included
  int r = 0;             // maximal cliques with at least one edge
  std::vector<int> d;    // clique dimensions |F| - 1, sorted descending, all >= 1
  std::map<int, int> values;  // k -> predicted depth S/J^k, for 1 <= k <= max(r + 1, k_max)
  int limit = 0;              // r + 2c

  int at(int k) const;
};

// Requires a closed labeling in CM interval form; throws DomainError otherwise.
DepthProfile depth_powers_cm_closed(const Graph& g, int k_max = 0);

struct DepthLimit {
  int value = 0;
  // Set for disconnected inputs, where r_ind + 2c is used in place of r_ind + 2.
  bool disconnected_caveat = false;
};
// r_ind + 2 for connected closed g. Throws DomainError if g is not closed.
DepthLimit depth_limit_closed(const Graph& g);

struct RegularityProfile {
  std::string graph;
  std::vector<int> ell;       // longest induced path per connected component
  std::map<int, int> values;  // k -> predicted reg S/J^k

  int at(int k) const;
};
// sum ell_c + 2(k - 1). Throws DomainError if g is not closed or has no edges.
int reg_powers_closed(const Graph& g, int k);
RegularityProfile regularity_profile(const Graph& g, int k_max);

struct PersistenceBudget {
  int max_n = 6;
  int max_k = 3;
};
// (J^{k+1} : J) == J^k by reduced-basis equality, computed mod the current prime.
// Throws CapacityError outside the budget.
bool persistence_check(const Graph& g, int k, const PersistenceBudget& budget = {});

// Depth of S/M for a monomial ideal M, supplied by the caller.
using MonomialDepthFn = std::function<int(const algebra::MonomialIdeal&)>;

// Depths of S/(in J)^k for k = 1..k_max, using in(J) = I(H) on a closed labeling.
std::vector<int> initial_power_depths(const Graph& g, int k_max, const MonomialDepthFn& depth);
// The depths above are non-increasing. Throws DomainError if g is not closed.
bool depth_monotone_initial(const Graph& g, int k_max, const MonomialDepthFn& depth);

// Rows {graph, k, predicted_depth, predicted_reg} for k = 1..k_max. The depth
// column is null when no depth formula applies.
nlohmann::json profile_rows(const Graph& g, int k_max);

}  // namespace binedge::formulas
