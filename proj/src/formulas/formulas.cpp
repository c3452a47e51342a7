#include "binedge/formulas.hpp"

#include <algorithm>
#include <numeric>

#include "binedge/bei.hpp"
#include "binedge/errors.hpp"

namespace binedge::formulas {

namespace {

void require_closed(const Graph& g, const char* op) {
  if (!is_closed_labeling(g)) {
    throw DomainError(std::string(op) + " needs a closed labeling; relabel with recognize_closed first");
  }
}

}  // namespace

int DepthProfile::at(int k) const {
  if (k < 1) throw DomainError("depth of powers needs k >= 1");
  auto it = values.find(k);
  return it != values.end() ? it->second : limit;
}

DepthProfile depth_powers_cm_closed(const Graph& g, int k_max) {
  require_closed(g, "depth_powers_cm_closed");
  auto cm = bei::cm_closed(g);
  if (!cm.cm) throw DomainError("depth_powers_cm_closed needs a Cohen-Macaulay closed graph");
  DepthProfile p;
  p.graph = to_graph6(g);
  p.c = static_cast<int>(connected_components(g).size());
  for (VertexSet clique : maximal_cliques(g).cliques) {
    if (set_size(clique) >= 2) p.d.push_back(set_size(clique) - 1);
  }
  std::sort(p.d.begin(), p.d.end(), std::greater<>());
  p.r = static_cast<int>(p.d.size());
  p.limit = p.r + 2 * p.c;
  int n = g.order();
  int last = std::max(p.r + 1, k_max);
  int dropped = 0;  // sum of d_j for j < k
  for (int k = 1; k <= last; ++k) {
    p.values[k] = k <= p.r ? n - dropped + k + p.c - 1 : p.limit;
    if (k <= p.r) dropped += p.d[k - 1];
  }
  return p;
}

DepthLimit depth_limit_closed(const Graph& g) {
  require_closed(g, "depth_limit_closed");
  int c = static_cast<int>(connected_components(g).size());
  int pieces = indecomposable_components(g).count;
  return {pieces + 2 * c, c > 1};
}

int RegularityProfile::at(int k) const { return values.at(k); }

int reg_powers_closed(const Graph& g, int k) {
  require_closed(g, "reg_powers_closed");
  if (k < 1) throw DomainError("regularity of powers needs k >= 1");
  if (g.edge_count() == 0) throw DomainError("reg_powers_closed needs at least one edge");
  int ell = 0;
  for (VertexSet comp : connected_components(g)) ell += longest_induced_path(g.induced(comp));
  return ell + 2 * (k - 1);
}

RegularityProfile regularity_profile(const Graph& g, int k_max) {
  RegularityProfile p;
  p.graph = to_graph6(g);
  for (int k = 1; k <= k_max; ++k) p.values[k] = reg_powers_closed(g, k);
  for (VertexSet comp : connected_components(g)) p.ell.push_back(longest_induced_path(g.induced(comp)));
  return p;
}

bool persistence_check(const Graph& g, int k, const PersistenceBudget& budget) {
  if (k < 1) throw DomainError("persistence_check needs k >= 1");
  if (g.order() > budget.max_n || k > budget.max_k) {
    throw CapacityError("persistence check budget is n <= " + std::to_string(budget.max_n) +
                        ", k <= " + std::to_string(budget.max_k));
  }
  auto j = bei::binomial_edge_ideal<algebra::ModP>(g);
  if (j.is_zero()) return true;
  auto lhs = algebra::quotient(algebra::power(j, k + 1), j);
  return lhs == (k == 1 ? j : algebra::power(j, k));
}

std::vector<int> initial_power_depths(const Graph& g, int k_max, const MonomialDepthFn& depth) {
  require_closed(g, "initial_power_depths");
  algebra::MonomialIdeal in_j = bei::initial_bipartite_graph(g).edge_ideal();
  std::vector<int> out;
  for (int k = 1; k <= k_max; ++k) out.push_back(depth(k == 1 ? in_j : algebra::power(in_j, k)));
  return out;
}

bool depth_monotone_initial(const Graph& g, int k_max, const MonomialDepthFn& depth) {
  auto depths = initial_power_depths(g, k_max, depth);
  return std::is_sorted(depths.begin(), depths.end(), std::greater<>());
}

nlohmann::json profile_rows(const Graph& g, int k_max) {
  require_closed(g, "profile_rows");
  std::optional<DepthProfile> depth;
  if (bei::cm_closed(g).cm) depth = depth_powers_cm_closed(g, k_max);
  nlohmann::json rows = nlohmann::json::array();
  std::string id = to_graph6(g);
  for (int k = 1; k <= k_max; ++k) {
    nlohmann::json row{{"graph", id}, {"k", k}};
    row["predicted_depth"] = depth ? nlohmann::json(depth->at(k)) : nlohmann::json(nullptr);
    row["predicted_reg"] = g.edge_count() > 0 ? nlohmann::json(reg_powers_closed(g, k)) : nlohmann::json(0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace binedge::formulas
