#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "binedge/algebra/ideal.hpp"

// Formula-free graded Betti numbers of S/I through Koszul homology
// H_i(x_1..x_N; S/I), with S/I spanned by the standard monomials of in(I),
// plus a generic-linear-form depth probe used as a second depth witness.
namespace binedge::oracle {

using algebra::Ideal;
using algebra::ModP;
using algebra::Monomial;
using algebra::MonomialIdeal;
using algebra::Polynomial;
using algebra::Rational;
using algebra::Ring;

using Degree = std::vector<int>;

// Monomial grading u -> A u over the slots 1..variables. Row 0 is the total
// degree. Rows may have entries of either sign.
struct Grading {
  int variables = 0;
  std::vector<std::vector<int>> rows;  // rows[r][v], v in 1..variables; index 0 unused

  Degree degree(const Monomial& m) const;
  // Degree of e_T for the set of slots T (bit v = slot v).
  Degree degree_of_set(std::uint32_t t) const;
};

// Z^N grading by the exponent vector itself.
Grading fine_grading(const Ring& ring);
// Finest grading under which every element of `basis` is homogeneous: the
// orthogonal complement of the exponent differences within each element.
// Throws DomainError if some element is not homogeneous in the total degree.
template <class K>
Grading finest_grading(const Ring& ring, const std::vector<Polynomial<K>>& basis);

// e_T ⊗ m with T a set of slots and m a standard monomial.
struct BasisElement {
  std::uint32_t t = 0;
  Monomial m;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

template <class K>
using SparseColumn = std::vector<std::pair<std::uint32_t, K>>;  // sorted by row

// Koszul differential K_{i,c} -> K_{i-1,c} in one graded piece c.
template <class K>
struct KoszulStratum {
  int i = 0;
  int j = 0;  // total degree, c[0]
  Degree degree;
  std::vector<BasisElement> basis;   // columns
  std::vector<BasisElement> target;  // rows
  std::vector<SparseColumn<K>> columns;
};

// Koszul complex of S/I in the grading of I's reduced basis. Not thread-safe:
// bases, normal forms and ranks are memoized per instance.
template <class K>
class KoszulComplex {
 public:
  static constexpr long long kDefaultMaxStratum = 400000;

  explicit KoszulComplex(const Ideal<K>& ideal, long long max_stratum = kDefaultMaxStratum);
  KoszulComplex(const Ideal<K>& ideal, Grading grading, long long max_stratum = kDefaultMaxStratum);

  const Grading& grading() const { return grading_; }
  const std::vector<BasisElement>& basis(int i, const Degree& c);
  KoszulStratum<K> stratum(int i, const Degree& c);
  long long rank(int i, const Degree& c);
  // dim H_i in degree c.
  long long homology(int i, const Degree& c);

 private:
  struct DegreeHash {
    std::size_t operator()(const std::pair<int, Degree>& key) const;
  };
  const Polynomial<K>& normal_form(const Monomial& m);
  void enumerate(int i, const Degree& c, std::vector<BasisElement>& out) const;

  Ideal<K> ideal_;
  MonomialIdeal initial_;
  Grading grading_;
  long long max_stratum_;
  algebra::Reducer<K> reducer_;
  // Suffix bounds per row: min and max of rows[r][w] over w >= v.
  std::vector<std::vector<int>> suffix_min_, suffix_max_;
  std::unordered_map<std::pair<int, Degree>, std::vector<BasisElement>, DegreeHash> bases_;
  std::unordered_map<std::pair<int, Degree>, long long, DegreeHash> ranks_;
  std::unordered_map<Monomial, Polynomial<K>, algebra::MonomialHash> normal_forms_;
};

struct BettiOptions {
  // Largest internal degree computed; < 0 selects 1 + deg lcm(in(I)).
  int degree_bound = -1;
  // Field of the homology computation. 0 selects exact rational arithmetic.
  // For Ideal<ModP> inputs the ideal's own prime is used instead.
  std::uint32_t prime = ModP::kDefaultPrime;
  std::uint64_t seed = 0;  // recorded only
  long long max_stratum = KoszulComplex<ModP>::kDefaultMaxStratum;  // basis elements per graded piece
};

struct BettiTable {
  int variables = 0;  // N = 2n
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j}(S/I), nonzero only
  int pd = 0;
  int reg = 0;
  int depth = 0;  // N - pd
  bool truncated = false;
  int degree_bound = 0;
  std::uint32_t prime = 0;  // 0 for Q
  std::uint64_t seed = 0;

  long long at(int i, int j) const;
  // sum_i (-1)^i beta_{i,j}, indexed by j.
  algebra::HilbertNumerator alternating_sum() const;
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

// Throws DomainError for non-homogeneous or unit ideals, CapacityError when a
// graded piece exceeds max_stratum.
BettiTable betti_table(const Ideal<Rational>& ideal, const BettiOptions& options = {});
BettiTable betti_table(const Ideal<ModP>& ideal, const BettiOptions& options = {});
BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

// Default degree bound for an ideal with the given initial ideal.
int default_degree_bound(const MonomialIdeal& initial);

// Nonzero beta_{i,b}(S/M) over the lcm lattice of M, with b a fine degree.
struct FineBetti {
  std::map<std::pair<int, Monomial>, long long> entries;
  bool pruned = false;  // some lattice element exceeded the degree bound
};
FineBetti fine_betti_numbers(const MonomialIdeal& m, int degree_bound, std::uint32_t prime);

// d_{i-1} d_i = 0 at c and d_i d_{i+1} = 0 at c, for up to `pieces_per_index`
// candidate pieces (i, c) per homological index i. The candidates are the
// pieces that betti_table evaluates.
bool differentials_compose_to_zero(const Ideal<ModP>& ideal, int pieces_per_index = 3);
bool differentials_compose_to_zero(const Ideal<Rational>& ideal, int pieces_per_index = 3);
bool differentials_compose_to_zero(const MonomialIdeal& ideal, int pieces_per_index = 3);

// a <= b entrywise.
bool dominated_by(const BettiTable& a, const BettiTable& b);

// The alternating Betti sum equals the Hilbert numerator of in(I).
bool hilbert_consistency(const MonomialIdeal& initial, const BettiTable& table);
template <class K>
bool hilbert_consistency(const Ideal<K>& ideal, const BettiTable& table) {
  return hilbert_consistency(ideal.initial_ideal(), table);
}

// Tables over two primes; on disagreement the table is recomputed over Q.
struct CertifiedBetti {
  BettiTable table;
  BettiTable second;
  bool primes_agree = true;
  bool rational_fallback = false;
};
CertifiedBetti certified_betti_table(const Ideal<Rational>& ideal, std::uint32_t p1, std::uint32_t p2,
                                     const BettiOptions& options = {});

struct DepthProbe {
  int depth = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
};
// Longest regular sequence of random linear forms found over `trials`
// attempts. A prefix l_1..l_t is accepted iff HS(S/(I + l_1..l_t)) equals
// (1-z)^t HS(S/I), which is equivalent to (I' : l) == I' at every step.
// Throws DomainError if trials < 2.
DepthProbe depth_probe_generic_forms(const Ideal<ModP>& ideal, int trials, std::uint64_t seed);
DepthProbe depth_probe_generic_forms(const Ideal<Rational>& ideal, int trials, std::uint64_t seed,
                                     std::uint32_t prime = ModP::kDefaultPrime);
DepthProbe depth_probe_generic_forms(const MonomialIdeal& ideal, int trials, std::uint64_t seed,
                                     std::uint32_t prime = ModP::kDefaultPrime);

// {"0": {"0": 1}, "1": {"2": 3}, ..., "pd": .., "reg": .., "depth": ..,
//  "truncated": .., "seed": .., "field": ..}
nlohmann::json to_json(const BettiTable& table);
// Macaulay-style triangle: columns i, rows j - i.
std::string to_text(const BettiTable& table);

}  // namespace binedge::oracle
