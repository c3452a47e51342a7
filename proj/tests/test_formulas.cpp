#include <doctest.h>

#include <algorithm>

#include "binedge/bei.hpp"
#include "binedge/errors.hpp"
#include "binedge/formulas.hpp"

using namespace binedge;
using namespace binedge::formulas;

TEST_CASE("depth formula examples") {
  for (int n = 2; n <= 6; ++n) {
    auto p = depth_powers_cm_closed(complete_graph(n), 4);
    CHECK(p.r == 1);
    CHECK(p.at(1) == n + 1);
    for (int k = 2; k <= 4; ++k) CHECK(p.at(k) == 3);
  }
  for (int n = 2; n <= 7; ++n) {
    auto p = depth_powers_cm_closed(path_graph(n), n + 2);
    for (int k = 1; k <= n + 2; ++k) CHECK(p.at(k) == n + 1);
  }
  auto chain = depth_powers_cm_closed(clique_chain({1, 3, 5}), 4);
  CHECK(chain.d == std::vector<int>{2, 2});
  CHECK(chain.at(1) == 6);
  CHECK(chain.at(2) == 5);
  CHECK(chain.at(3) == 4);
  CHECK(chain.at(4) == 4);
  CHECK(chain.limit == 4);

  // Dimensions are sorted regardless of interval order.
  auto lop = depth_powers_cm_closed(clique_chain({1, 2, 5}));
  CHECK(lop.d == std::vector<int>{3, 1});
  CHECK(lop.at(2) == 5 - 3 + 2);

  auto two = depth_powers_cm_closed(disjoint_union(complete_graph(3), complete_graph(3)), 3);
  CHECK(two.c == 2);
  CHECK(two.at(1) == 6 + 2);
  CHECK(two.at(2) == 6 - 2 + 2 + 1);
  CHECK(two.at(3) == 2 + 4);

  CHECK(depth_powers_cm_closed(Graph(3)).at(2) == 6);
}

TEST_CASE("depth formula refuses outside its domain") {
  CHECK_THROWS_AS(depth_powers_cm_closed(claw_graph()), DomainError);
  CHECK_THROWS_AS(depth_powers_cm_closed(Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})), DomainError);
  CHECK_THROWS_AS(depth_powers_cm_closed(complete_graph(3)).at(0), DomainError);
}

TEST_CASE("depth profile invariants on CM closed graphs") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : closed_labeled_graphs(n)) {
      if (!bei::cm_closed(g).cm) continue;
      auto p = depth_powers_cm_closed(g, 10);
      CHECK(std::is_sorted(p.d.begin(), p.d.end(), std::greater<>()));
      CHECK(std::all_of(p.d.begin(), p.d.end(), [](int d) { return d >= 1; }));
      for (int k = 1; k < 10; ++k) CHECK(p.at(k + 1) <= p.at(k));
      for (int k = p.r + 1; k <= 10; ++k) CHECK(p.at(k) == p.limit);
      // The last drop before the plateau is d_r - 1, so it is strict when d_r >= 2.
      if (p.r >= 1 && p.d.back() >= 2) CHECK(p.at(p.r) > p.limit);
      CHECK(p.at(1) == n + p.c);
      if (n <= 5 && g.edge_count() > 0) {
        CHECK(algebra::krull_dimension(bei::binomial_edge_ideal<algebra::ModP>(g)) == p.at(1));
      }
      if (is_connected(g)) {
        auto lim = depth_limit_closed(g);
        CHECK_FALSE(lim.disconnected_caveat);
        CHECK(lim.value == p.limit);
      }
    }
  }
}

TEST_CASE("depth limit") {
  for (int n = 2; n <= 6; ++n) CHECK(depth_limit_closed(complete_graph(n)).value == 3);
  for (int n = 2; n <= 7; ++n) CHECK(depth_limit_closed(path_graph(n)).value == n + 1);
  auto split = depth_limit_closed(disjoint_union(path_graph(3), complete_graph(3)));
  CHECK(split.disconnected_caveat);
  CHECK(split.value == 2 + 1 + 4);
  CHECK_THROWS_AS(depth_limit_closed(claw_graph()), DomainError);
}

TEST_CASE("regularity formula") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(reg_powers_closed(complete_graph(n), k) == 2 * k - 1);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= 3; ++k) CHECK(reg_powers_closed(path_graph(n), k) == n - 1 + 2 * (k - 1));
  CHECK(reg_powers_closed(disjoint_union(complete_graph(3), complete_graph(3)), 2) == 4);
  CHECK_THROWS_AS(reg_powers_closed(claw_graph(), 1), DomainError);
  CHECK_THROWS_AS(reg_powers_closed(Graph(3), 1), DomainError);

  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : closed_labeled_graphs(n)) {
      if (g.edge_count() == 0) continue;
      auto p = regularity_profile(g, 4);
      for (int k = 1; k < 4; ++k) CHECK(p.at(k + 1) - p.at(k) == 2);
      // reg at k = 1 is the induced matching number of the initial bipartite graph.
      CHECK(p.at(1) == bei::induced_matching_number(bei::initial_bipartite_graph(g)));
    }
  }
}

TEST_CASE("persistence") {
  CHECK(persistence_check(path_graph(3), 1));
  CHECK(persistence_check(complete_graph(3), 2));
  CHECK(persistence_check(clique_chain({1, 3, 4}), 1));
  CHECK_THROWS_AS(persistence_check(path_graph(7), 1), CapacityError);
  CHECK_THROWS_AS(persistence_check(path_graph(3), 4), CapacityError);
  CHECK(persistence_check(Graph(2), 1));
}

TEST_CASE("initial depth monotonicity uses the supplied depth function") {
  int calls = 0;
  std::vector<int> script{5, 3, 3};
  auto fake = [&](const algebra::MonomialIdeal&) { return script[calls++]; };
  CHECK(depth_monotone_initial(complete_graph(4), 3, fake));
  calls = 0;
  script = {5, 3, 4};
  CHECK_FALSE(depth_monotone_initial(complete_graph(4), 3, fake));

  // The depth function sees (in J)^k.
  std::vector<std::size_t> sizes;
  auto record = [&](const algebra::MonomialIdeal& m) {
    sizes.push_back(m.generators().size());
    return 0;
  };
  initial_power_depths(path_graph(3), 3, record);
  CHECK(sizes == std::vector<std::size_t>{2, 3, 4});
  CHECK_THROWS_AS(depth_monotone_initial(claw_graph(), 2, record), DomainError);
}

TEST_CASE("profile rows") {
  auto rows = profile_rows(complete_graph(4), 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["graph"] == to_graph6(complete_graph(4)));
  CHECK(rows[0]["predicted_depth"] == 5);
  CHECK(rows[1]["predicted_depth"] == 3);
  CHECK(rows[2]["predicted_reg"] == 5);
  auto non_cm = profile_rows(Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}), 1);
  CHECK(non_cm[0]["predicted_depth"].is_null());
  CHECK(non_cm[0]["predicted_reg"] == 2);
}
