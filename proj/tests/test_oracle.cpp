#include <doctest.h>

#include <set>

#include "binedge/bei.hpp"
#include "binedge/errors.hpp"
#include "binedge/oracle.hpp"

using namespace binedge;
using namespace binedge::oracle;
using algebra::make_ring;

namespace {

template <class K>
Polynomial<K> var(int slot) {
  return Polynomial<K>::variable(slot);
}

template <class K>
Ideal<K> bei_power(const Graph& g, int k) {
  auto j = bei::binomial_edge_ideal<K>(g);
  return k == 1 ? j : algebra::power(j, k);
}

algebra::MonomialIdeal initial_power(const Graph& g, int k) {
  auto m = bei::binomial_edge_ideal<ModP>(g).initial_ideal();
  return k == 1 ? m : algebra::power(m, k);
}

void monomials_of_degree(int variables, int degree, int first, Monomial m, std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(m);
    return;
  }
  for (int v = first; v <= variables; ++v) monomials_of_degree(variables, degree - 1, v, m * Monomial::variable(v), out);
}

// Every graded piece reached by some monomial of total degree <= max_degree.
std::set<Degree> pieces(const Grading& grading, int max_degree) {
  std::set<Degree> out;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Monomial> ms;
    monomials_of_degree(grading.variables, d, 1, Monomial{}, ms);
    for (const auto& m : ms) out.insert(grading.degree(m));
  }
  return out;
}

template <class K>
void check_differentials(const Ideal<K>& ideal, int max_degree) {
  typename algebra::FieldContext<K>::Guard guard(ideal.context());
  KoszulComplex<K> complex(ideal);
  const int n = complex.grading().variables;
  int nonzero_maps = 0;
  for (const Degree& c : pieces(complex.grading(), max_degree)) {
    for (int i = 1; i <= std::min(n, c[0]); ++i) {
      auto s = complex.stratum(i, c);
      REQUIRE(s.columns.size() == s.basis.size());
      REQUIRE(s.target.size() == complex.basis(i - 1, c).size());
      for (const auto& col : s.columns)
        for (const auto& [r, x] : col) REQUIRE(r < s.target.size());
      if (i == 1) continue;
      auto below = complex.stratum(i - 1, c);
      REQUIRE(below.basis == s.target);
      for (const auto& col : s.columns) {
        std::map<std::uint32_t, K> acc;
        for (const auto& [r, x] : col)
          for (const auto& [q, y] : below.columns[r]) acc[q] += x * y;
        for (const auto& [q, z] : acc) CHECK(algebra::is_zero(z));
        nonzero_maps += col.empty() ? 0 : 1;
      }
      CHECK(complex.homology(i, c) >= 0);
    }
  }
  CHECK(nonzero_maps > 0);
}

void check_shape(const BettiTable& t) {
  CHECK(t.at(0, 0) == 1);
  for (const auto& [ij, beta] : t.entries) {
    CHECK(beta > 0);
    if (ij.first == 0) CHECK(ij.second == 0);
  }
  CHECK(t.pd <= t.variables);
  CHECK(t.depth == t.variables - t.pd);
}

}  // namespace

TEST_CASE("betti tables of small examples") {
  auto r1 = make_ring(1);
  auto x = betti_table(Ideal<Rational>(r1, {var<Rational>(r1.x(1))}));
  CHECK(x.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(x.pd == 1);
  CHECK(x.depth == 1);
  CHECK(x.reg == 0);

  for (std::uint32_t prime : {0U, 32003U}) {
    BettiOptions options;
    options.prime = prime;
    auto k3 = betti_table(bei::binomial_edge_ideal<Rational>(complete_graph(3)), options);
    CHECK(k3.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
    CHECK(k3.pd == 2);
    CHECK(k3.depth == 4);
    CHECK(k3.reg == 1);
    CHECK(k3.prime == prime);
  }

  auto p3 = betti_table(bei::binomial_edge_ideal<ModP>(path_graph(3)).initial_ideal());
  CHECK(p3.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
  CHECK(p3.depth == 4);

  // Complete intersection pulled back along a non-monomial GB.
  auto r2 = make_ring(2);
  auto ci = Ideal<ModP>(r2, {var<ModP>(r2.x(1)) * var<ModP>(r2.x(2)) + var<ModP>(r2.y(1)).pow(2),
                             var<ModP>(r2.y(2)).pow(2) - var<ModP>(r2.x(1)) * var<ModP>(r2.y(1))});
  auto ct = betti_table(ci);
  CHECK(ct.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
  CHECK(ct.depth == 2);
}

TEST_CASE("table shape invariants") {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n, true)) {
      check_shape(betti_table(bei::binomial_edge_ideal<ModP>(g)));
      check_shape(betti_table(bei::binomial_edge_ideal<ModP>(g).initial_ideal()));
    }
  check_shape(betti_table(bei_power<ModP>(complete_graph(4), 2)));
}

TEST_CASE("errors and truncation") {
  auto r1 = make_ring(1);
  auto x = var<ModP>(r1.x(1));
  CHECK_THROWS_AS(betti_table(Ideal<ModP>(r1, {x + x.pow(2)})), DomainError);
  CHECK_THROWS_AS(betti_table(Ideal<ModP>(r1, {Polynomial<ModP>::monomial(Monomial{})})), DomainError);

  BettiOptions tiny;
  tiny.max_stratum = 1;
  CHECK_THROWS_AS(betti_table(bei::binomial_edge_ideal<ModP>(cycle_graph(4)), tiny), CapacityError);

  auto j = bei::binomial_edge_ideal<ModP>(complete_graph(3));
  CHECK(default_degree_bound(j.initial_ideal()) == 5);  // lcm x1 x2 y2 y3
  BettiOptions low;
  low.degree_bound = 2;
  auto t = betti_table(j, low);
  CHECK(t.truncated);
  CHECK(t.degree_bound == 2);
  CHECK(t.at(1, 2) == 3);
  CHECK(t.at(2, 3) == 0);
  CHECK_FALSE(betti_table(j).truncated);
  CHECK(hilbert_consistency(j, t));
}

TEST_CASE("hilbert consistency") {
  auto r2 = make_ring(2);
  auto f = var<ModP>(r2.x(1)).pow(2) * var<ModP>(r2.y(1)) + var<ModP>(r2.x(2)).pow(3);
  auto principal = Ideal<ModP>(r2, {f});
  CHECK(algebra::hilbert_numerator(principal) == algebra::HilbertNumerator{1, 0, 0, -1});
  auto pt = betti_table(principal);
  CHECK(pt.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 3}, 1}});
  CHECK(hilbert_consistency(principal, pt));

  auto ci = Ideal<ModP>(r2, {var<ModP>(r2.x(1)).pow(2), var<ModP>(r2.y(2)).pow(2) + var<ModP>(r2.x(1)) * var<ModP>(r2.y(1))});
  CHECK(algebra::hilbert_numerator(ci) == algebra::HilbertNumerator{1, 0, -2, 0, 1});
  auto ct = betti_table(ci);
  CHECK(hilbert_consistency(ci, ct));
  ct.entries[{2, 4}] += 1;
  CHECK_FALSE(hilbert_consistency(ci, ct));

  auto j = bei::binomial_edge_ideal<Rational>(complete_graph(3));
  CHECK(algebra::hilbert_numerator(j) == algebra::HilbertNumerator{1, 0, -3, 2});
  CHECK(hilbert_consistency(j, betti_table(j)));

  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : closed_labeled_graphs(n))
      for (int k = 1; k <= (n <= 4 ? 2 : 1); ++k) {
        if (g.edge_count() == 0) continue;
        auto jk = bei_power<ModP>(g, k);
        CHECK(hilbert_consistency(jk, betti_table(jk)));
        auto m = initial_power(g, k);
        CHECK(hilbert_consistency(m, betti_table(m)));
      }
}

TEST_CASE("koszul differentials compose to zero") {
  check_differentials(bei::binomial_edge_ideal<ModP>(cycle_graph(4)), 4);
  check_differentials(bei::binomial_edge_ideal<Rational>(claw_graph()), 3);
  check_differentials(bei_power<ModP>(complete_graph(3), 2), 5);
  auto r2 = make_ring(2);
  check_differentials(Ideal<ModP>(r2, {var<ModP>(r2.x(1)) * var<ModP>(r2.y(2)), var<ModP>(r2.x(2)).pow(2)}), 5);
}

TEST_CASE("fine grading and finest grading") {
  auto r2 = make_ring(2);
  auto fine = fine_grading(r2);
  CHECK(fine.variables == 4);
  CHECK(fine.degree(Monomial::variable(r2.x(1), 2) * Monomial::variable(r2.y(2))) == Degree{3, 2, 0, 0, 1});
  // The binomial ideal is homogeneous for the vertex grading and the x/y split.
  auto g = finest_grading(r2, bei::binomial_edge_ideal<ModP>(complete_graph(2)).groebner_basis());
  CHECK(g.rows.size() == 4);  // total degree plus a basis of the rank-3 complement
  CHECK(g.degree(Monomial::variable(r2.x(1)) * Monomial::variable(r2.y(2))) ==
        g.degree(Monomial::variable(r2.x(2)) * Monomial::variable(r2.y(1))));
  CHECK(g.degree(Monomial::variable(r2.x(1))) != g.degree(Monomial::variable(r2.y(1))));
  auto f = var<ModP>(r2.x(1)) + var<ModP>(r2.x(1)).pow(2);
  CHECK_THROWS_AS(finest_grading(r2, std::vector<Polynomial<ModP>>{f}), DomainError);
}

TEST_CASE("fine betti numbers of a monomial ideal") {
  auto r2 = make_ring(2);
  auto x1 = Monomial::variable(r2.x(1)), x2 = Monomial::variable(r2.x(2)), y1 = Monomial::variable(r2.y(1));
  // (x1 x2, x2 y1, x1 y1): the lcm x1 x2 y1 carries two second syzygies.
  auto fine = fine_betti_numbers(MonomialIdeal(r2, {x1 * x2, x2 * y1, x1 * y1}), 10, 32003);
  CHECK(fine.entries.at({0, Monomial{}}) == 1);
  CHECK(fine.entries.at({1, x1 * x2}) == 1);
  CHECK(fine.entries.at({2, x1 * x2 * y1}) == 2);
  CHECK(fine.entries.size() == 5);
  CHECK_FALSE(fine.pruned);
  CHECK(fine_betti_numbers(MonomialIdeal(r2, {x1 * x2, x2 * y1, x1 * y1}), 2, 32003).pruned);
}

TEST_CASE("semicontinuity against the initial ideal") {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n, true))
      for (int k = 1; k <= (n <= 3 ? 2 : 1); ++k) {
        auto jt = betti_table(bei_power<ModP>(g, k));
        auto it = betti_table(initial_power(g, k));
        CHECK(dominated_by(jt, it));
        CHECK(jt.depth >= it.depth);
        CHECK(jt.reg <= it.reg);
      }
}

TEST_CASE("closed CM graphs share the table of the initial ideal") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : closed_labeled_graphs(n)) {
      if (g.edge_count() == 0) continue;
      if (!bei::cm_closed(g).cm) continue;
      auto j = bei::binomial_edge_ideal<ModP>(g);
      CHECK(betti_table(j) == betti_table(j.initial_ideal()));
    }
}

TEST_CASE("two primes and the rational field agree") {
  for (const Graph& g : {cycle_graph(4), claw_graph(), complete_graph(4), path_graph(4)}) {
    auto j = bei::binomial_edge_ideal<Rational>(g);
    auto cert = certified_betti_table(j, 32003, 31991);
    CHECK(cert.primes_agree);
    CHECK_FALSE(cert.rational_fallback);
    CHECK(cert.table == cert.second);
    CHECK(cert.second.prime == 31991);
    BettiOptions q;
    q.prime = 0;
    CHECK(betti_table(j, q) == cert.table);
  }
  auto j = bei::binomial_edge_ideal<Rational>(path_graph(2));
  CHECK_THROWS_AS(certified_betti_table(j, 32003, 32003), DomainError);
  CHECK_THROWS_AS(certified_betti_table(j, 0, 32003), DomainError);
}

TEST_CASE("depth probe examples") {
  auto k3 = bei::binomial_edge_ideal<ModP>(complete_graph(3));
  auto p = depth_probe_generic_forms(k3, 2, 11);
  CHECK(p.depth == 4);
  CHECK(p.trials == 2);
  CHECK(p.seed == 11);
  CHECK(p.prime == 32003);

  auto r2 = make_ring(2);
  std::vector<Polynomial<ModP>> gens;
  for (int v = 1; v <= 4; ++v) gens.push_back(var<ModP>(r2.x(1)) * var<ModP>(v));
  CHECK(depth_probe_generic_forms(Ideal<ModP>(r2, gens), 2, 0).depth == 0);
  gens.pop_back();  // y2 becomes a free variable
  CHECK(depth_probe_generic_forms(Ideal<ModP>(r2, gens), 2, 0).depth == 1);

  for (int n = 3; n <= 4; ++n) CHECK(depth_probe_generic_forms(bei_power<ModP>(complete_graph(n), 2), 2, 5).depth == 3);

  CHECK_THROWS_AS(depth_probe_generic_forms(k3, 1, 0), DomainError);
  auto q = bei::binomial_edge_ideal<Rational>(path_graph(4));
  CHECK(depth_probe_generic_forms(q, 3, 2, 31991).depth == 5);
  CHECK(depth_probe_generic_forms(q.initial_ideal(), 2, 2).depth == 5);
}

TEST_CASE("two-witness depth agreement") {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n, true))
      for (int k = 1; k <= (n <= 3 ? 2 : 1); ++k) {
        auto j = bei_power<ModP>(g, k);
        CHECK(depth_probe_generic_forms(j, 2, 1).depth == betti_table(j).depth);
        auto m = initial_power(g, k);
        CHECK(depth_probe_generic_forms(m, 2, 1).depth == betti_table(m).depth);
      }
}

TEST_CASE("serialization") {
  auto t = betti_table(bei::binomial_edge_ideal<ModP>(complete_graph(3)));
  auto json = to_json(t);
  CHECK(json == nlohmann::json::parse(R"({"0": {"0": 1}, "1": {"2": 3}, "2": {"3": 2}, "pd": 2, "reg": 1,
      "depth": 4, "truncated": false, "seed": 0, "field": "ZZ/32003"})"));
  BettiOptions q;
  q.prime = 0;
  q.seed = 9;
  auto tq = betti_table(bei::binomial_edge_ideal<Rational>(complete_graph(3)), q);
  CHECK(to_json(tq)["field"] == "QQ");
  CHECK(to_json(tq)["seed"] == 9);
  CHECK(to_text(t) ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n");
}

TEST_CASE("differential spot check on candidate pieces") {
  CHECK(differentials_compose_to_zero(bei::binomial_edge_ideal<ModP>(cycle_graph(5))));
  CHECK(differentials_compose_to_zero(bei::binomial_edge_ideal<Rational>(complete_graph(4))));
  CHECK(differentials_compose_to_zero(bei_power<ModP>(path_graph(3), 2), 5));
  CHECK(differentials_compose_to_zero(initial_power(complete_graph(4), 2)));
}
