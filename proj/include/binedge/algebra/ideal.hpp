#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "binedge/algebra/groebner.hpp"
#include "binedge/algebra/monomial_ideal.hpp"
#include "binedge/algebra/polynomial.hpp"

namespace binedge::algebra {

// Ideal of S = K[x_1..x_n, y_1..y_n] (t allowed during eliminations).
// Values are immutable; copies share one lazily computed reduced lex
// Groebner basis, populated at most once.
template <class K>
class Ideal {
 public:
  using Poly = Polynomial<K>;

  Ideal() : Ideal(Ring{1}, {}) {}
  Ideal(Ring ring, std::vector<Poly> gens, GbOptions options = {});
  // Trusts `basis` to be the reduced Groebner basis of the ideal it generates.
  static Ideal from_reduced_basis(Ring ring, std::vector<Poly> basis, GbOptions options = {});

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const GbOptions& options() const { return options_; }
  const FieldContext<K>& context() const { return context_; }

  const std::vector<Poly>& groebner_basis() const;
  MonomialIdeal initial_ideal() const;
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_zero() const { return groebner_basis().empty(); }
  bool is_unit() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.groebner_basis() == b.groebner_basis();
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };

  Ring ring_;
  std::vector<Poly> gens_;
  GbOptions options_;
  FieldContext<K> context_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
Ideal<K> sum(const Ideal<K>& a, const Ideal<K>& b);
template <class K>
Ideal<K> product(const Ideal<K>& a, const Ideal<K>& b);
// Generated by every k-fold product of generators, duplicates removed.
template <class K>
Ideal<K> power(const Ideal<K>& a, int k);
// Elimination of t from t*a + (1 - t)*b.
template <class K>
Ideal<K> intersection(const Ideal<K>& a, const Ideal<K>& b);
template <class K>
Ideal<K> intersection(std::span<const Ideal<K>> ideals);
// (a : f) from the generators of a cap (f), each divided exactly by f.
template <class K>
Ideal<K> quotient(const Ideal<K>& a, const Polynomial<K>& f);
// (a : b) as the intersection of (a : g) over the generators g of b.
template <class K>
Ideal<K> quotient(const Ideal<K>& a, const Ideal<K>& b);

template <class K>
HilbertNumerator hilbert_numerator(const Ideal<K>& a);
template <class K>
int krull_dimension(const Ideal<K>& a);

Ideal<ModP> reduce_mod_p(const Ideal<Rational>& a);

// {"n": n, "generators": ["x1*y2 - x2*y1", ...]}
template <class K>
std::string to_json(const Ideal<K>& a);
template <class K>
Ideal<K> ideal_from_json(std::string_view text);

extern template class Ideal<ModP>;
extern template class Ideal<Rational>;

}  // namespace binedge::algebra
