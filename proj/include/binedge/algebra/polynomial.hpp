#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binedge/algebra/coefficients.hpp"
#include "binedge/algebra/monomial.hpp"

namespace binedge::algebra {

template <class K>
struct Term {
  Monomial m;
  K c;
};

// Sparse polynomial: terms strictly decreasing in lex order, no zero
// coefficients.
template <class K>
class Polynomial {
 public:
  using Coefficient = K;

  Polynomial() = default;
  explicit Polynomial(const K& constant);
  static Polynomial monomial(const Monomial& m, const K& c = K(1));
  static Polynomial variable(int slot) { return monomial(Monomial::variable(slot)); }
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term<K>> terms);

  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& leading_monomial() const { return terms_.front().m; }
  const K& leading_coefficient() const { return terms_.front().c; }

  int degree() const;  // total degree; -1 for zero
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool involves_t() const;

  Polynomial monic() const;
  Polynomial scaled(const K& c) const;
  Polynomial times(const Monomial& m, const K& c = K(1)) const;
  Polynomial pow(int k) const;

  // Removes the leading term.
  void pop_leading() { terms_.erase(terms_.begin()); }

  // *this += c * m * g, relying on multiplicativity of the order.
  void add_scaled(const Polynomial& g, const K& c, const Monomial& m);

  // h with h * g == *this, if g divides *this exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r.add_scaled(b, K(1), Monomial{});
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r.add_scaled(b, K(-1), Monomial{});
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c)) return false;
    }
    return true;
  }

 private:
  Polynomial multiply(const Polynomial& b) const;
  std::vector<Term<K>> terms_;
};

std::string to_string(const Monomial& m, const Ring& ring);

template <class K>
std::string to_string(const Polynomial<K>& f, const Ring& ring);

// Grammar: sums and differences of products of integers, fractions,
// variables t, x<i>, y<i> (1 <= i <= n), parenthesised subexpressions,
// each optionally raised to a non-negative integer power.
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const Ring& ring);

Polynomial<ModP> reduce_mod_p(const Polynomial<Rational>& f);

// The 2-minor x_i y_j - x_j y_i.
template <class K>
Polynomial<K> minor2(const Ring& ring, int i, int j);

extern template class Polynomial<ModP>;
extern template class Polynomial<Rational>;

}  // namespace binedge::algebra
