#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "binedge/bei.hpp"
#include "binedge/errors.hpp"

using namespace binedge;
using namespace binedge::bei;
using algebra::ModP;
using algebra::Monomial;
using algebra::MonomialIdeal;
using algebra::Rational;

namespace {

using QPoly = Polynomial<Rational>;

template <class K>
std::vector<Polynomial<K>> monic_sorted(std::vector<Polynomial<K>> ps) {
  for (auto& p : ps) p = p.monic();
  std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return ps;
}

}  // namespace

TEST_CASE("closed labelings are generated exactly") {
  for (int n = 1; n <= 5; ++n) {
    std::size_t brute = 0;
    for (const Graph& g : labeled_graphs(n, false)) brute += is_closed_labeling(g) ? 1 : 0;
    auto gen = closed_labeled_graphs(n);
    CHECK(gen.size() == brute);
    for (const Graph& g : gen) CHECK(is_closed_labeling(g));
  }
}

TEST_CASE("binomial edge ideal generators") {
  Ring r3 = algebra::make_ring(3);
  auto j = binomial_edge_ideal<Rational>(path_graph(3));
  REQUIRE(j.generators().size() == 2);
  CHECK(to_string(j.generators()[0], r3) == "x1*y2 - x2*y1");
  CHECK(to_string(j.generators()[1], r3) == "x2*y3 - x3*y2");
  CHECK(j.ring().variable_count() == 6);
  CHECK(binomial_edge_ideal<Rational>(complete_graph(2)).generators().size() == 1);
  CHECK(binomial_edge_ideal<Rational>(Graph(4)).is_zero());
}

TEST_CASE("minimal primes and heights") {
  auto k3 = minimal_primes(complete_graph(3));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].cut.removed == 0);
  CHECK(k3[0].height == 2);
  CHECK(k3[0].generators<Rational>(algebra::make_ring(3)).size() == 3);

  auto p3 = minimal_primes(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].cut.removed == 0);
  CHECK(p3[0].height == 2);
  CHECK(p3[1].cut.removed == make_set({2}));
  CHECK(p3[1].height == 2);
  Ring r3 = algebra::make_ring(3);
  CHECK(prime_ideal<Rational>(path_graph(3), p3[0]) == binomial_edge_ideal<Rational>(complete_graph(3)));
  auto w2 = prime_ideal<Rational>(path_graph(3), p3[1]);
  CHECK(w2 == algebra::Ideal<Rational>(r3, {QPoly::variable(r3.x(2)), QPoly::variable(r3.y(2))}));

  auto net = minimal_primes(net_graph());
  CHECK(net.size() == 7);
  for (const auto& p : net) {
    int n = 6;
    CHECK(p.height == n - p.cut.count() + set_size(p.cut.removed));
  }
}

TEST_CASE("unmixed and cm_closed") {
  for (int n = 1; n <= 6; ++n) CHECK(unmixed(complete_graph(n)));
  CHECK_FALSE(unmixed(claw_graph()));
  CHECK(unmixed(net_graph()));

  auto pn = cm_closed(path_graph(5));
  CHECK(pn.cm);
  CHECK(pn.unmixed);
  REQUIRE(pn.interval_form);
  CHECK(*pn.interval_form == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});

  auto kn = cm_closed(complete_graph(4));
  CHECK(kn.cm);
  CHECK(*kn.interval_form == std::vector<std::vector<int>>{{1, 4}});

  auto chain = cm_closed(Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK_FALSE(chain.cm);
  CHECK_FALSE(chain.unmixed);
  CHECK_FALSE(chain.interval_form);

  auto split = cm_closed(disjoint_union(path_graph(2), complete_graph(3)));
  CHECK(split.cm);
  CHECK(*split.interval_form == std::vector<std::vector<int>>{{1, 2}, {3, 5}});

  CHECK_THROWS_AS(cm_closed(claw_graph()), DomainError);
  // Not closed in this labeling, closed after relabeling.
  CHECK_THROWS_AS(cm_closed(Graph(3, {{1, 3}, {2, 3}})), DomainError);
}

TEST_CASE("cm_closed implies unmixed and agrees with unmixed on closed graphs") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : closed_labeled_graphs(n)) {
      auto r = cm_closed(g);
      CHECK(r.unmixed == unmixed(g));
      if (r.cm) CHECK(r.unmixed);
      // For closed graphs the two notions coincide.
      CHECK(r.cm == r.unmixed);
    }
  }
}

TEST_CASE("closed labelings have a quadratic Groebner basis") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : closed_labeled_graphs(n)) {
      if (g.edge_count() == 0) continue;
      auto j = binomial_edge_ideal<Rational>(g);
      auto gb = monic_sorted(j.groebner_basis());
      auto gens = monic_sorted(j.generators());
      CHECK(gb == gens);
      CHECK(algebra::is_groebner_basis(j.generators()));
    }
  }
}

TEST_CASE("non-closed labelings of connected graphs acquire higher degree basis elements") {
  // Disconnected graphs can have a quadratic basis without interval neighborhoods,
  // e.g. the single edge {1,3} beside an isolated vertex 2.
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : labeled_graphs(n, false)) {
      if (!is_connected(g)) continue;
      auto gb = binomial_edge_ideal<ModP>(g).groebner_basis();
      bool quadratic = std::all_of(gb.begin(), gb.end(), [](const auto& p) { return p.degree() == 2; });
      CHECK(quadratic == is_closed_labeling(g));
    }
  }
  CHECK(algebra::is_groebner_basis(binomial_edge_ideal<ModP>(Graph(3, {{1, 3}})).generators()));
  CHECK_FALSE(is_closed_labeling(Graph(3, {{1, 3}})));
}

TEST_CASE("bipartite initial graph is the initial ideal for closed labelings") {
  auto h3 = initial_bipartite_graph(path_graph(3));
  CHECK(h3.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  auto hk = initial_bipartite_graph(complete_graph(3));
  CHECK(hk.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(initial_bipartite_graph(claw_graph()), DomainError);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : closed_labeled_graphs(n)) {
      auto h = initial_bipartite_graph(g);
      CHECK(static_cast<int>(h.edges.size()) == g.edge_count());
      if (g.edge_count() > 0) CHECK(h.edge_ideal() == binomial_edge_ideal<ModP>(g).initial_ideal());
      if (is_connected(g)) {
        CHECK(h.y_isolated(1));
        CHECK(h.x_isolated(n));
      }
    }
  }
}

TEST_CASE("induced matching number") {
  for (int n = 2; n <= 6; ++n) CHECK(induced_matching_number(initial_bipartite_graph(complete_graph(n))) == 1);
  CHECK(induced_matching_number(initial_bipartite_graph(path_graph(4))) == 3);
  CHECK(induced_matching_number(initial_bipartite_graph(path_graph(2))) == 1);
  CHECK(induced_matching_number(initial_bipartite_graph(Graph(3))) == 0);
  CHECK_THROWS_AS(induced_matching_number(initial_bipartite_graph(complete_graph(10))), CapacityError);

  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : closed_labeled_graphs(n)) {
      int expected = 0;
      for (VertexSet c : connected_components(g)) expected += longest_induced_path(g.induced(c));
      CHECK(induced_matching_number(initial_bipartite_graph(g)) == expected);
    }
  }
}

TEST_CASE("prime decomposition recovers J for connected graphs") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : graphs_up_to_isomorphism(n, true)) {
      auto j = binomial_edge_ideal<ModP>(g);
      std::vector<algebra::Ideal<ModP>> parts;
      for (const auto& p : minimal_primes(g)) parts.push_back(prime_ideal<ModP>(g, p));
      auto meet = algebra::intersection(std::span<const algebra::Ideal<ModP>>(parts));
      CHECK_MESSAGE(meet == j, to_graph6(g));
    }
  }
  // Exact arithmetic on the small cases.
  for (const Graph& g : graphs_up_to_isomorphism(4, true)) {
    auto j = binomial_edge_ideal<Rational>(g);
    CHECK(SymbolicPowers<Rational>(g).symbolic_power(1) == j);
  }
}

TEST_CASE("initial ideal is the intersection of initial primes") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : labeled_graphs(n, false)) {
      if (g.edge_count() == 0) continue;
      MonomialIdeal lhs = binedge::bei::binomial_edge_ideal<ModP>(g).initial_ideal();
      std::optional<MonomialIdeal> rhs;
      for (const auto& p : minimal_primes(g)) {
        MonomialIdeal in_p = prime_ideal<ModP>(g, p).initial_ideal();
        rhs = rhs ? algebra::intersection(*rhs, in_p) : in_p;
      }
      CHECK_MESSAGE(lhs == *rhs, to_graph6(g));
    }
  }
}

TEST_CASE("powers of closed graphs: initial ideal of powers") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : closed_labeled_graphs(n)) {
      if (g.edge_count() == 0) continue;
      auto j = binomial_edge_ideal<ModP>(g);
      MonomialIdeal in_j = j.initial_ideal();
      int kmax = n <= 5 ? 3 : 2;
      for (int i = 2; i <= kmax; ++i) {
        CHECK_MESSAGE(algebra::power(j, i).initial_ideal() == algebra::power(in_j, i),
                      to_graph6(g) << " i=" << i);
      }
    }
  }
}

TEST_CASE("symbolic powers equal ordinary powers for closed graphs") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : closed_labeled_graphs(n)) {
      if (!is_connected(g)) continue;
      CHECK_MESSAGE(symbolic_equals_ordinary<ModP>(g, 2), to_graph6(g));
    }
  }
  CHECK(symbolic_equals_ordinary<Rational>(complete_graph(2), 1));
  CHECK(symbolic_equals_ordinary<Rational>(complete_graph(2), 2));
  CHECK(symbolic_equals_ordinary<Rational>(path_graph(4), 2));
  CHECK_THROWS_AS(symbolic_equals_ordinary<ModP>(path_graph(7), 2), CapacityError);
  CHECK_THROWS_AS(symbolic_equals_ordinary<ModP>(path_graph(3), 3), CapacityError);
}

TEST_CASE("net witness") {
  Graph net = net_graph();
  Ring r = ring_of(net);
  std::vector<int> id{0, 1, 2, 3, 4, 5, 6};
  QPoly g = net_witness_family<Rational>(net, id, 2);
  CHECK(g == algebra::parse_polynomial<Rational>(
                 "x3*x5*x6*y1*y2*y4 - x1*x5*x6*y2*y3*y4 - x3*x4*x5*y1*y2*y6 + x1*x2*x5*y3*y4*y6"
                 " + x1*x3*x4*y2*y5*y6 - x1*x2*x3*y4*y5*y6",
                 r));
  QPoly g3 = net_witness_family<Rational>(net, id, 3);
  CHECK(g3 == g * algebra::minor2<Rational>(r, 2, 3));

  SymbolicPowers<Rational> sym(net);
  auto j = binomial_edge_ideal<Rational>(net);
  CHECK(sym.contains(g, 2));
  CHECK_FALSE(algebra::power(j, 2).contains(g));
  CHECK(symbolic_power_membership(j.generators().front(), net, 1));
  CHECK_FALSE(symbolic_equals_ordinary<ModP>(net, 2));

  CHECK_THROWS_AS(net_witness_family<Rational>(net, id, 1), DomainError);
  std::vector<int> bad{0, 2, 1, 3, 4, 5, 6};
  CHECK_THROWS_AS(net_witness_family<Rational>(net, bad, 2), DomainError);
  CHECK_THROWS_AS(net_witness_family<Rational>(complete_graph(6), id, 2), DomainError);
}

TEST_CASE("net witness transported into a 7-vertex block graph") {
  // Net plus a pendant on vertex 1, with the net relabeled so the pendant is vertex 1.
  Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {4, 6}, {3, 6}, {5, 4}, {7, 6}});
  REQUIRE(classify_block_graph(g).is_block);
  auto map = find_induced_subgraph(g, net_graph());
  REQUIRE(map);
  auto w = net_witness_family<ModP>(g, *map, 2);
  CHECK(symbolic_power_membership(w, g, 2));
  CHECK_FALSE(algebra::power(binomial_edge_ideal<ModP>(g), 2).contains(w));
  CHECK_FALSE(symbolic_equals_ordinary<ModP>(g, 2, SymbolicBudget{7, 2}));
}

TEST_CASE("prime powers are memoized per cut set and exponent") {
  SymbolicPowers<ModP> sym(path_graph(4));
  auto a = sym.prime_power(1, 2);
  auto b = sym.prime_power(1, 2);
  // Copies share one cached basis.
  CHECK(&a.groebner_basis() == &b.groebner_basis());
  CHECK_THROWS_AS(sym.prime_power(0, 0), DomainError);
}
