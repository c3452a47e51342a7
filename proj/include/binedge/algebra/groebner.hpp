#pragma once

#include <cstddef>
#include <vector>

#include "binedge/algebra/polynomial.hpp"

namespace binedge::algebra {

// Budget for a single Buchberger run; exceeding any limit throws CapacityError.
struct GbOptions {
  std::size_t max_basis = 50000;
  std::size_t max_pairs = 5000000;
  int max_degree = 100;
};

// Division by a fixed list of polynomials with nonzero leading terms.
template <class K>
class Reducer {
 public:
  // The basis must outlive the reducer.
  explicit Reducer(const std::vector<Polynomial<K>>& basis);
  explicit Reducer(std::vector<const Polynomial<K>*> basis);

  // Index of the first element whose leading monomial divides m, or -1.
  int find_divisor(const Monomial& m) const;
  // Fully reduced remainder: no term is divisible by a leading monomial.
  Polynomial<K> normal_form(Polynomial<K> f) const;
  bool reduces_to_zero(Polynomial<K> f) const;

 private:
  std::vector<const Polynomial<K>*> basis_;
  std::vector<Monomial> leading_;
};

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g);

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis);

// Reduced lex Groebner basis, monic, sorted by decreasing leading monomial.
// Pairs are processed by sugar degree, then lcm, then creation index; the
// Gebauer-Moeller criteria discard redundant pairs.
template <class K>
std::vector<Polynomial<K>> buchberger(std::vector<Polynomial<K>> gens,
                                      const GbOptions& options = {});

// Buchberger's criterion on the given list as is: every S-polynomial of a
// pair with non-coprime leading monomials reduces to zero. Stops at the
// first failure.
template <class K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& gens);

// Turns a Groebner basis into the reduced one.
template <class K>
std::vector<Polynomial<K>> interreduce(std::vector<Polynomial<K>> basis);

}  // namespace binedge::algebra
