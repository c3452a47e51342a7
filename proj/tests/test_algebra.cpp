#include <doctest.h>

#include <map>
#include <thread>
#include <random>

#include "binedge/algebra/groebner.hpp"
#include "binedge/algebra/ideal.hpp"
#include "binedge/algebra/monomial_ideal.hpp"
#include "binedge/errors.hpp"

using namespace binedge;
using namespace binedge::algebra;

namespace {

using QPoly = Polynomial<Rational>;
using QIdeal = Ideal<Rational>;

QPoly P(const std::string& s, const Ring& r) { return parse_polynomial<Rational>(s, r); }

QIdeal I(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (const char* s : gens) g.push_back(P(s, r));
  return QIdeal(r, std::move(g));
}

Monomial random_monomial(std::mt19937_64& rng, int slots, int max_exp) {
  Monomial m;
  for (int s = 0; s < slots; ++s) m = m.with_exponent(s, int(rng() % (max_exp + 1)));
  return m;
}

template <class K>
Polynomial<K> random_poly(std::mt19937_64& rng, const Ring& r, int terms, int max_exp) {
  std::vector<Term<K>> t;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int s = 1; s <= 2 * r.n; ++s) m = m.with_exponent(s, int(rng() % (max_exp + 1)));
    t.push_back({m, K(static_cast<long>(rng() % 7) - 3)});
  }
  return Polynomial<K>::from_terms(std::move(t));
}

// Number of standard monomials of degree d, by brute force over all monomials.
long long count_standard(const MonomialIdeal& m, int variables, int d) {
  long long count = 0;
  std::vector<int> e(variables, 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == variables - 1) {
      e[slot] = left;
      Monomial mono;
      for (int s = 0; s < variables; ++s) mono = mono.with_exponent(s + 1, e[s]);
      if (!m.contains(mono)) ++count;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[slot] = a;
      self(self, slot + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return count;
}

// Coefficient of z^d in N(z) / (1 - z)^v.
long long series_coefficient(const HilbertNumerator& h, int v, int d) {
  auto binom = [](long long a, long long b) {
    if (b < 0 || a < b) return 0LL;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  long long s = 0;
  for (std::size_t i = 0; i < h.size() && int(i) <= d; ++i)
    s += h[i] * binom(d - int(i) + v - 1, v - 1);
  return s;
}

}  // namespace

TEST_CASE("packed monomials agree with per-slot arithmetic") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    Monomial a = random_monomial(rng, 16, 5), b = random_monomial(rng, 16, 5);
    bool divides = true, coprime = true;
    int deg = 0;
    for (int s = 0; s < 16; ++s) {
      divides = divides && a.exponent(s) <= b.exponent(s);
      coprime = coprime && (a.exponent(s) == 0 || b.exponent(s) == 0);
      deg += a.exponent(s);
      CHECK(a.lcm(b).exponent(s) == std::max(a.exponent(s), b.exponent(s)));
      CHECK(a.gcd(b).exponent(s) == std::min(a.exponent(s), b.exponent(s)));
      CHECK((a * b).exponent(s) == a.exponent(s) + b.exponent(s));
    }
    CHECK(a.divides(b) == divides);
    CHECK(a.coprime(b) == coprime);
    CHECK(a.degree() == deg);
    CHECK(a.divides(a * b));
    CHECK(a.quotient_of(a * b) == b);

    // Lex with slot 0 highest, and the order is multiplicative.
    int first = 0;
    while (first < 16 && a.exponent(first) == b.exponent(first)) ++first;
    if (first < 16) CHECK((a < b) == (a.exponent(first) < b.exponent(first)));
    Monomial w = random_monomial(rng, 16, 3);
    CHECK((a < b) == (a * w < b * w));
  }
  CHECK_THROWS_AS(Monomial::variable(3, 100) * Monomial::variable(3, 30), CapacityError);
  CHECK_THROWS_AS(make_ring(8), CapacityError);
}

TEST_CASE("prime field arithmetic") {
  ModP::Scope scope(7);
  CHECK(ModP(3) * ModP(5) == ModP(1));
  CHECK(ModP(3).inverse() == ModP(5));
  CHECK(ModP(-1).value() == 6);
  CHECK(ModP(6).symmetric() == -1);
  CHECK(reduce_mod_p(Rational(1, 2)) == ModP(4));
  CHECK_THROWS_AS(reduce_mod_p(Rational(1, 7)), DomainError);
  CHECK_THROWS_AS(ModP::Scope(8), DomainError);
  {
    ModP::Scope inner(11);
    CHECK(ModP::modulus() == 11);
  }
  CHECK(ModP::modulus() == 7);
}

TEST_CASE("polynomial text round-trips and ring axioms") {
  Ring r = make_ring(3);
  QPoly f = P("x1*y2 - x2*y1", r);
  CHECK(to_string(f, r) == "x1*y2 - x2*y1");
  CHECK(to_string(P("-3/2*x1^2*y3 + 4", r), r) == "-3/2*x1^2*y3 + 4");
  CHECK(P("(x1 - y1)^2", r) == P("x1^2 - 2*x1*y1 + y1^2", r));
  CHECK(P("x_2*y_3", r) == P("x2*y3", r));
  CHECK(P("0", r).is_zero());
  CHECK_THROWS_AS(P("x4", r), ParseError);
  CHECK_THROWS_AS(P("x1 +", r), ParseError);
  CHECK_THROWS_AS(P("x1 ** y2", r), ParseError);
  CHECK_THROWS_AS(P("1/0", r), ParseError);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly<Rational>(rng, r, 4, 2);
    auto b = random_poly<Rational>(rng, r, 4, 2);
    auto c = random_poly<Rational>(rng, r, 3, 2);
    CHECK(P(to_string(a, r), r) == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    if (!b.is_zero()) {
      auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }
}

TEST_CASE("buchberger basics") {
  Ring r3 = make_ring(3);
  // Complete graph on three vertices: the 2-minors are already a reduced basis.
  auto k3 = buchberger<Rational>({minor2<Rational>(r3, 1, 2), minor2<Rational>(r3, 1, 3),
                                  minor2<Rational>(r3, 2, 3)});
  CHECK(k3.size() == 3);
  CHECK(k3[0] == P("x1*y2 - x2*y1", r3));
  CHECK(k3[1] == P("x1*y3 - x3*y1", r3));
  CHECK(k3[2] == P("x2*y3 - x3*y2", r3));

  Ring r2 = make_ring(2);
  auto edge = buchberger<Rational>({P("x1*y2 - x2*y1", r2)});
  CHECK(edge == std::vector<QPoly>{P("x1*y2 - x2*y1", r2)});

  // Claw with center 1: some S-polynomial survives and a cubic appears.
  Ring r4 = make_ring(4);
  std::vector<QPoly> claw{minor2<Rational>(r4, 1, 2), minor2<Rational>(r4, 1, 3),
                          minor2<Rational>(r4, 1, 4)};
  CHECK_FALSE(is_groebner_basis(claw));
  auto gb = buchberger(claw);
  CHECK(gb.size() > 3);
  CHECK(std::any_of(gb.begin(), gb.end(), [](const QPoly& g) { return g.degree() == 3; }));
  CHECK(is_groebner_basis(gb));

  CHECK_THROWS_AS(buchberger(claw, GbOptions{.max_basis = 3}), CapacityError);
}

TEST_CASE("normal forms") {
  Ring r2 = make_ring(2);
  QIdeal edge = I(r2, {"x1*y2 - x2*y1"});
  CHECK(edge.normal_form(P("x1*y2", r2)) == P("x2*y1", r2));

  Ring r3 = make_ring(3);
  QIdeal k3 = I(r3, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"});
  CHECK(k3.normal_form(P("x1*y3 - x3*y1", r3)).is_zero());
  QIdeal p3 = I(r3, {"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
  CHECK(p3.normal_form(P("x1*y3", r3)) == P("x1*y3", r3));

  // Random combinations are members; perturbations by standard monomials are not.
  std::mt19937_64 rng(4);
  Ring r4 = make_ring(4);
  QIdeal claw = I(r4, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x1*y4 - x4*y1"});
  for (int trial = 0; trial < 60; ++trial) {
    QPoly f;
    for (const auto& g : claw.generators()) f = f + random_poly<Rational>(rng, r4, 3, 1) * g;
    CHECK(claw.contains(f));
    QPoly rem = claw.normal_form(random_poly<Rational>(rng, r4, 3, 2));
    if (!rem.is_zero()) CHECK_FALSE(claw.contains(f + rem));
    for (const auto& t : rem.terms()) CHECK_FALSE(claw.initial_ideal().contains(t.m));
  }
}

TEST_CASE("powers") {
  Ring r3 = make_ring(3);
  QPoly f = P("x1*y2 - x2*y1", r3);
  CHECK(power(QIdeal(r3, {f}), 2) == QIdeal(r3, {f * f}));

  QIdeal k3 = I(r3, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"});
  QIdeal sq = power(k3, 2);
  CHECK(sq.generators().size() == 6);
  CHECK(sq.initial_ideal() == power(k3.initial_ideal(), 2));

  Ring r1 = make_ring(1);
  CHECK(power(I(r1, {"x1", "y1"}), 2) == I(r1, {"x1^2", "x1*y1", "y1^2"}));
}

TEST_CASE("intersection and quotient") {
  Ring r1 = make_ring(1);
  CHECK(intersection(I(r1, {"x1"}), I(r1, {"y1"})) == I(r1, {"x1*y1"}));
  CHECK(quotient(I(r1, {"x1^2"}), P("x1", r1)) == I(r1, {"x1"}));
  CHECK(quotient(I(r1, {"x1*y1"}), I(r1, {"x1"})) == I(r1, {"y1"}));
  CHECK(quotient(I(r1, {"x1*y1"}), P("x1*y1", r1)).is_unit());

  Ring r3 = make_ring(3);
  QIdeal p3 = I(r3, {"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
  CHECK(intersection(p3, p3) == p3);
  // Minimal primes of the path on three vertices.
  QIdeal whole = I(r3, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"});
  QIdeal middle = I(r3, {"x2", "y2"});
  CHECK(intersection(whole, middle) == p3);

  // Strong persistence for the path: (J^2 : J) = J.
  CHECK(quotient(power(p3, 2), p3) == p3);

  // Elimination agrees with lcm intersection on monomial ideals.
  std::mt19937_64 rng(9);
  Ring r2 = make_ring(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> ga, gb;
    for (int i = 0; i < 3; ++i) {
      Monomial m, w;
      for (int s = 1; s <= 4; ++s) {
        m = m.with_exponent(s, int(rng() % 3));
        w = w.with_exponent(s, int(rng() % 3));
      }
      if (!m.is_one()) ga.push_back(m);
      if (!w.is_one()) gb.push_back(w);
    }
    if (ga.empty() || gb.empty()) continue;
    std::vector<QPoly> pa, pb;
    for (auto& m : ga) pa.push_back(QPoly::monomial(m));
    for (auto& m : gb) pb.push_back(QPoly::monomial(m));
    QIdeal meet = intersection(QIdeal(r2, pa), QIdeal(r2, pb));
    CHECK(meet.initial_ideal() ==
          intersection(MonomialIdeal(r2, ga), MonomialIdeal(r2, gb)));
    Monomial q = ga.front();
    QIdeal colon = quotient(QIdeal(r2, pb), QPoly::monomial(q));
    CHECK(colon.initial_ideal() == quotient(MonomialIdeal(r2, gb), q));
  }
}

TEST_CASE("hilbert numerators and dimension") {
  Ring r1 = make_ring(1);
  CHECK(krull_dimension(I(r1, {"x1"})) == 1);
  CHECK(krull_dimension(I(r1, {"x1", "y1"})) == 0);
  CHECK(krull_dimension(I(r1, {"1"})) == -1);
  CHECK(krull_dimension(QIdeal(r1, {})) == 2);

  for (int n = 2; n <= 5; ++n) {
    Ring r = make_ring(n);
    std::vector<QPoly> gens;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) gens.push_back(minor2<Rational>(r, i, j));
    CHECK(krull_dimension(QIdeal(r, gens)) == n + 1);
  }
  Ring r3 = make_ring(3);
  QIdeal p3 = I(r3, {"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
  CHECK(krull_dimension(p3) == 4);

  Ring r2 = make_ring(2);
  CHECK(hilbert_numerator(I(r2, {"x1*y2 - x2*y1"})) == HilbertNumerator{1, 0, -1});
  CHECK(hilbert_numerator(I(r2, {"x1^3 + y1^3"})) == HilbertNumerator{1, 0, 0, -1});
  CHECK(hilbert_numerator(I(r2, {"x1*y2", "x2*y1"})) == HilbertNumerator{1, 0, -2, 0, 1});
  QIdeal k3 = I(r3, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"});
  CHECK(hilbert_numerator(k3) == HilbertNumerator{1, 0, -3, 2});
  CHECK(to_string(HilbertNumerator{1, 0, -3, 2}) == "1 - 3*z^2 + 2*z^3");

  // Series coefficients against brute-force counts of standard monomials.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> gens;
    int count = 1 + int(rng() % 5);
    for (int i = 0; i < count; ++i) {
      Monomial m;
      for (int s = 1; s <= 4; ++s) m = m.with_exponent(s, int(rng() % 3));
      if (!m.is_one()) gens.push_back(m);
    }
    MonomialIdeal m(r2, gens);
    auto h = hilbert_numerator(m);
    for (int d = 0; d <= 7; ++d) CHECK(series_coefficient(h, 4, d) == count_standard(m, 4, d));
  }
}

TEST_CASE("coefficient-field independence of leading terms") {
  std::mt19937_64 rng(23);
  Ring r = make_ring(4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial<Rational>> gens;
    for (int e = 0; e < 4; ++e) {
      int i = 1 + int(rng() % 4), j = 1 + int(rng() % 4);
      if (i == j) continue;
      gens.push_back(minor2<Rational>(r, std::min(i, j), std::max(i, j)));
    }
    if (gens.empty()) continue;
    QIdeal q(r, gens);
    for (std::uint32_t p : {32003U, 31991U}) {
      ModP::Scope scope(p);
      CHECK(reduce_mod_p(q).initial_ideal() == q.initial_ideal());
    }
  }
}

TEST_CASE("ideal JSON") {
  Ring r3 = make_ring(3);
  QIdeal p3 = I(r3, {"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
  std::string js = to_json(p3);
  CHECK(js == R"({"generators":["x1*y2 - x2*y1","x2*y3 - x3*y2"],"n":3})");
  QIdeal back = ideal_from_json<Rational>(js);
  CHECK(back.generators() == p3.generators());
  CHECK_THROWS_AS(ideal_from_json<Rational>("{\"n\": 3}"), ParseError);
  CHECK_THROWS_AS(ideal_from_json<Rational>("not json"), ParseError);
}

TEST_CASE("concurrent first access to a shared basis") {
  Ring r4 = make_ring(4);
  QIdeal claw = I(r4, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x1*y4 - x4*y1"});
  std::vector<std::thread> threads;
  std::vector<std::size_t> sizes(4);
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] { sizes[i] = claw.groebner_basis().size(); });
  for (auto& t : threads) t.join();
  for (auto s : sizes) CHECK(s == sizes[0]);
}
