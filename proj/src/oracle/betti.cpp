#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "binedge/errors.hpp"
#include "binedge/oracle.hpp"
#include "sparse_rank.hpp"

namespace binedge::oracle {

using algebra::FieldContext;

// ---------------------------------------------------------------------------
// Gradings

Degree Grading::degree(const Monomial& m) const {
  Degree d(rows.size(), 0);
  for (int v = 1; v <= variables; ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    for (std::size_t r = 0; r < rows.size(); ++r) d[r] += rows[r][v] * e;
  }
  return d;
}

Degree Grading::degree_of_set(std::uint32_t t) const {
  Degree d(rows.size(), 0);
  for (int v = 1; v <= variables; ++v) {
    if (((t >> v) & 1U) == 0) continue;
    for (std::size_t r = 0; r < rows.size(); ++r) d[r] += rows[r][v];
  }
  return d;
}

Grading fine_grading(const Ring& ring) {
  Grading g;
  g.variables = ring.variable_count();
  g.rows.assign(g.variables + 1, std::vector<int>(g.variables + 1, 0));
  for (int v = 1; v <= g.variables; ++v) {
    g.rows[0][v] = 1;
    g.rows[v][v] = 1;
  }
  return g;
}

template <class K>
Grading finest_grading(const Ring& ring, const std::vector<Polynomial<K>>& basis) {
  const int n = ring.variable_count();
  std::set<std::vector<long>> deltas;
  for (const auto& f : basis) {
    if (f.involves_t()) throw DomainError("graded Betti numbers need t-free ideals");
    const auto& terms = f.terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      std::vector<long> d(n, 0);
      long total = 0;
      for (int v = 1; v <= n; ++v) {
        d[v - 1] = terms[k].m.exponent(v) - terms[0].m.exponent(v);
        total += d[v - 1];
      }
      if (total != 0) throw DomainError("graded Betti numbers need a homogeneous ideal");
      deltas.insert(std::move(d));
    }
  }
  // Reduced row echelon form of the difference vectors over Q.
  std::vector<std::vector<Rational>> mat;
  for (const auto& d : deltas) mat.emplace_back(d.begin(), d.end());
  std::vector<int> pivot_cols;
  std::size_t row = 0;
  for (int col = 0; col < n && row < mat.size(); ++col) {
    std::size_t p = row;
    while (p < mat.size() && algebra::is_zero(mat[p][col])) ++p;
    if (p == mat.size()) continue;
    std::swap(mat[p], mat[row]);
    Rational inv = 1 / mat[row][col];
    for (auto& x : mat[row]) x *= inv;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == row || algebra::is_zero(mat[r][col])) continue;
      Rational c = mat[r][col];
      for (int k = 0; k < n; ++k) mat[r][k] -= c * mat[row][k];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  Grading g;
  g.variables = n;
  std::vector<int> ones(n + 1, 1);
  ones[0] = 0;
  g.rows.push_back(ones);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -mat[k][f];
    mpz_class den = 1;
    for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
    std::vector<int> w(n + 1, 0);
    for (int k = 0; k < n; ++k) {
      mpz_class z = mpz_class(v[k] * den);
      w[k + 1] = static_cast<int>(z.get_si());
    }
    g.rows.push_back(std::move(w));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Koszul complex over the standard monomials

namespace {

std::size_t hash_degree(int i, const Degree& c) {
  std::size_t h = std::hash<int>{}(i);
  for (int x : c) h = h * 1000003U ^ std::hash<int>{}(x);
  return h;
}

struct BasisElementHash {
  std::size_t operator()(const BasisElement& e) const {
    return algebra::MonomialHash{}(e.m) * 31U ^ std::hash<std::uint32_t>{}(e.t);
  }
};

}  // namespace

template <class K>
std::size_t KoszulComplex<K>::DegreeHash::operator()(const std::pair<int, Degree>& key) const {
  return hash_degree(key.first, key.second);
}

template <class K>
KoszulComplex<K>::KoszulComplex(const Ideal<K>& ideal, long long max_stratum)
    : KoszulComplex(ideal, finest_grading(ideal.ring(), ideal.groebner_basis()), max_stratum) {}

template <class K>
KoszulComplex<K>::KoszulComplex(const Ideal<K>& ideal, Grading grading, long long max_stratum)
    : ideal_(ideal),
      initial_(ideal.initial_ideal()),
      grading_(std::move(grading)),
      max_stratum_(max_stratum),
      reducer_(ideal_.groebner_basis()) {
  const int n = grading_.variables;
  for (const auto& row : grading_.rows) {
    std::vector<int> lo(n + 2, 0), hi(n + 2, 0);
    lo[n + 1] = std::numeric_limits<int>::max();
    hi[n + 1] = std::numeric_limits<int>::min();
    for (int v = n; v >= 1; --v) {
      lo[v] = std::min(lo[v + 1], row[v]);
      hi[v] = std::max(hi[v + 1], row[v]);
    }
    suffix_min_.push_back(std::move(lo));
    suffix_max_.push_back(std::move(hi));
  }
}

template <class K>
void KoszulComplex<K>::enumerate(int i, const Degree& c, std::vector<BasisElement>& out) const {
  const int n = grading_.variables;
  const std::size_t rows = grading_.rows.size();
  Degree rem = c;
  auto rec = [&](auto&& self, int v, std::uint32_t t, int count, Monomial u) -> void {
    if (rem[0] == 0) {
      if (count != i) return;
      if (std::any_of(rem.begin(), rem.end(), [](int x) { return x != 0; })) return;
      out.push_back({t, u});
      if (static_cast<long long>(out.size()) > max_stratum_) {
        throw CapacityError("Koszul stratum exceeds " + std::to_string(max_stratum_) + " basis elements");
      }
      return;
    }
    if (v > n || rem[0] < 0) return;
    if (i - count > n - v + 1 || i - count > rem[0]) return;
    // Every later variable adds its column to the degree; rem must stay reachable.
    for (std::size_t r = 1; r < rows; ++r) {
      long long lo = static_cast<long long>(suffix_min_[r][v]) * rem[0];
      long long hi = static_cast<long long>(suffix_max_[r][v]) * rem[0];
      if (rem[r] < lo || rem[r] > hi) return;
    }
    const auto& col = grading_.rows;
    for (int tv = 0; tv <= (count < i ? 1 : 0); ++tv) {
      Monomial w = u;
      for (int e = 0;; ++e) {
        int weight = tv + e;
        if (weight > rem[0]) break;
        if (e > 0) {
          if (e > Monomial::kMaxExponent) break;
          w = w.with_exponent(v, e);
          if (initial_.contains(w)) break;  // multiples stay in in(I)
        }
        for (std::size_t r = 0; r < rows; ++r) rem[r] -= col[r][v] * weight;
        self(self, v + 1, tv ? (t | (1U << v)) : t, count + tv, w);
        for (std::size_t r = 0; r < rows; ++r) rem[r] += col[r][v] * weight;
      }
    }
  };
  rec(rec, 1, 0U, 0, Monomial());
}

template <class K>
const std::vector<BasisElement>& KoszulComplex<K>::basis(int i, const Degree& c) {
  auto key = std::make_pair(i, c);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  std::vector<BasisElement> out;
  if (i >= 0 && i <= grading_.variables) enumerate(i, c, out);
  return bases_.emplace(std::move(key), std::move(out)).first->second;
}

template <class K>
const Polynomial<K>& KoszulComplex<K>::normal_form(const Monomial& m) {
  auto it = normal_forms_.find(m);
  if (it != normal_forms_.end()) return it->second;
  auto nf = reducer_.normal_form(Polynomial<K>::monomial(m, K(1)));
  return normal_forms_.emplace(m, std::move(nf)).first->second;
}

template <class K>
KoszulStratum<K> KoszulComplex<K>::stratum(int i, const Degree& c) {
  typename FieldContext<K>::Guard guard(ideal_.context());
  KoszulStratum<K> s;
  s.i = i;
  s.j = c.at(0);
  s.degree = c;
  s.basis = basis(i, c);
  if (i == 0) {
    s.columns.assign(s.basis.size(), {});
    return s;
  }
  s.target = basis(i - 1, c);
  std::unordered_map<BasisElement, std::uint32_t, BasisElementHash> index;
  for (std::uint32_t k = 0; k < s.target.size(); ++k) index.emplace(s.target[k], k);
  auto lookup = [&](std::uint32_t t, const Monomial& m) {
    auto it = index.find({t, m});
    if (it == index.end()) throw std::logic_error("Koszul differential left its graded piece");
    return it->second;
  };
  for (const auto& e : s.basis) {
    std::map<std::uint32_t, K> acc;
    int position = 0;
    for (int v = 1; v <= grading_.variables; ++v) {
      if (((e.t >> v) & 1U) == 0) continue;
      K sign = position % 2 == 0 ? K(1) : K(-1);
      ++position;
      std::uint32_t rest = e.t & ~(1U << v);
      Monomial product = e.m * Monomial::variable(v);
      if (!initial_.contains(product)) {
        acc[lookup(rest, product)] += sign;
        continue;
      }
      for (const auto& term : normal_form(product).terms()) acc[lookup(rest, term.m)] += sign * term.c;
    }
    SparseColumn<K> colv;
    for (auto& [r, x] : acc)
      if (!algebra::is_zero(x)) colv.emplace_back(r, x);
    s.columns.push_back(std::move(colv));
  }
  return s;
}

template <class K>
long long KoszulComplex<K>::rank(int i, const Degree& c) {
  if (i <= 0 || i > grading_.variables) return 0;
  auto key = std::make_pair(i, c);
  auto it = ranks_.find(key);
  if (it != ranks_.end()) return it->second;
  long long r = 0;
  if (!basis(i, c).empty() && !basis(i - 1, c).empty()) {
    auto s = stratum(i, c);
    typename FieldContext<K>::Guard guard(ideal_.context());
    r = detail::sparse_rank(std::move(s.columns), static_cast<std::uint32_t>(s.target.size()));
  }
  return ranks_.emplace(std::move(key), r).first->second;
}

template <class K>
long long KoszulComplex<K>::homology(int i, const Degree& c) {
  typename FieldContext<K>::Guard guard(ideal_.context());
  long long dim = static_cast<long long>(basis(i, c).size());
  if (dim == 0) return 0;
  return dim - rank(i, c) - rank(i + 1, c);
}

template class KoszulComplex<ModP>;
template class KoszulComplex<Rational>;
template Grading finest_grading(const Ring&, const std::vector<Polynomial<ModP>>&);
template Grading finest_grading(const Ring&, const std::vector<Polynomial<Rational>>&);

// ---------------------------------------------------------------------------
// Monomial ideals: fine degrees over the lcm lattice

int default_degree_bound(const MonomialIdeal& initial) {
  Monomial l;
  for (const auto& g : initial.generators()) l = l.lcm(g);
  return 1 + l.degree();
}

namespace {

// Ranks of the complex on standard subsets T of supp(b): x^{b - T} not in M,
// equivalently T meets every tight mask.
template <class K>
void fine_degree_betti(const Monomial& b, const std::vector<std::uint32_t>& masks, int slots,
                       std::map<std::pair<int, Monomial>, long long>& out) {
  std::vector<int> support;
  for (int v = 1; v <= slots; ++v)
    if (b.exponent(v) > 0) support.push_back(v);
  const int s = static_cast<int>(support.size());
  // Local masks over the support positions.
  std::vector<std::uint32_t> local;
  for (std::uint32_t m : masks) {
    std::uint32_t l = 0;
    for (int k = 0; k < s; ++k)
      if ((m >> support[k]) & 1U) l |= 1U << k;
    local.push_back(l);
  }
  auto standard = [&](std::uint32_t t) {
    return std::all_of(local.begin(), local.end(), [t](std::uint32_t m) { return (t & m) != 0; });
  };
  std::vector<std::vector<std::uint32_t>> by_size(s + 1);
  std::vector<std::int32_t> index(std::size_t{1} << s, -1);
  for (std::uint32_t t = 0; t < (1U << s); ++t) {
    if (!standard(t)) continue;
    auto& bucket = by_size[std::popcount(t)];
    index[t] = static_cast<std::int32_t>(bucket.size());
    bucket.push_back(t);
  }
  std::vector<long long> ranks(s + 2, 0);
  for (int i = 1; i <= s; ++i) {
    if (by_size[i].empty() || by_size[i - 1].empty()) continue;
    std::vector<detail::Sparse<K>> cols;
    for (std::uint32_t t : by_size[i]) {
      detail::Sparse<K> col;
      int position = 0;
      for (int k = 0; k < s; ++k) {
        if (((t >> k) & 1U) == 0) continue;
        std::uint32_t rest = t & ~(1U << k);
        if (index[rest] >= 0) col.emplace_back(index[rest], position % 2 == 0 ? K(1) : K(-1));
        ++position;
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
      cols.push_back(std::move(col));
    }
    ranks[i] = detail::sparse_rank(std::move(cols), static_cast<std::uint32_t>(by_size[i - 1].size()));
  }
  for (int i = 0; i <= s; ++i) {
    long long beta = static_cast<long long>(by_size[i].size()) - ranks[i] - ranks[i + 1];
    if (beta != 0) out[{i, b}] = beta;
  }
}

template <class K>
FineBetti fine_betti_impl(const MonomialIdeal& m, int degree_bound) {
  FineBetti fb;
  const int slots = m.ring().variable_count();
  const auto& gens = m.generators();
  std::unordered_set<Monomial, algebra::MonomialHash> seen{Monomial()};
  std::vector<Monomial> stack{Monomial()};
  while (!stack.empty()) {
    Monomial b = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      Monomial l = b.lcm(g);
      if (l.degree() > degree_bound) {
        fb.pruned = true;
        continue;
      }
      if (seen.insert(l).second) stack.push_back(l);
    }
  }
  std::vector<Monomial> lattice(seen.begin(), seen.end());
  std::sort(lattice.begin(), lattice.end());
  for (const Monomial& b : lattice) {
    std::vector<std::uint32_t> masks;
    for (const auto& g : gens) {
      if (!g.divides(b)) continue;
      std::uint32_t tight = 0;
      for (int v = 1; v <= slots; ++v)
        if (b.exponent(v) > 0 && g.exponent(v) == b.exponent(v)) tight |= 1U << v;
      masks.push_back(tight);
    }
    // Only inclusion-minimal masks constrain hitting sets.
    std::sort(masks.begin(), masks.end(), [](auto a, auto c) { return std::popcount(a) < std::popcount(c); });
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t x : masks) {
      bool covered = std::any_of(minimal.begin(), minimal.end(), [x](std::uint32_t y) { return (y & x) == y; });
      if (!covered) minimal.push_back(x);
    }
    fine_degree_betti<K>(b, minimal, slots, fb.entries);
  }
  return fb;
}

}  // namespace

FineBetti fine_betti_numbers(const MonomialIdeal& m, int degree_bound, std::uint32_t prime) {
  if (m.involves_t()) throw DomainError("graded Betti numbers need t-free ideals");
  if (prime == 0) return fine_betti_impl<Rational>(m, degree_bound);
  ModP::Scope scope(prime);
  return fine_betti_impl<ModP>(m, degree_bound);
}

// ---------------------------------------------------------------------------
// Tables

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

algebra::HilbertNumerator BettiTable::alternating_sum() const {
  algebra::HilbertNumerator h;
  for (const auto& [ij, beta] : entries) {
    auto [i, j] = ij;
    if (static_cast<int>(h.size()) <= j) h.resize(j + 1, 0);
    h[j] += (i % 2 == 0 ? 1 : -1) * beta;
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

namespace {

void finish(BettiTable& t) {
  t.pd = 0;
  t.reg = 0;
  for (const auto& [ij, beta] : t.entries) {
    t.pd = std::max(t.pd, ij.first);
    t.reg = std::max(t.reg, ij.second - ij.first);
  }
  t.depth = t.variables - t.pd;
  for (const auto& [ij, beta] : t.entries)
    if (ij.second == t.degree_bound) t.truncated = true;
}

BettiTable from_fine(const FineBetti& fb, int variables, int bound) {
  BettiTable t;
  t.variables = variables;
  t.degree_bound = bound;
  for (const auto& [key, beta] : fb.entries) t.entries[{key.first, key.second.degree()}] += beta;
  t.truncated = fb.pruned;
  finish(t);
  return t;
}

template <class K>
BettiTable compute(const Ideal<K>& ideal, const BettiOptions& options, std::uint32_t prime) {
  const auto& gb = ideal.groebner_basis();
  if (ideal.is_unit()) throw DomainError("S/I is zero for the unit ideal");
  Grading grading = finest_grading(ideal.ring(), gb);
  MonomialIdeal initial = ideal.initial_ideal();
  if (initial.involves_t()) throw DomainError("graded Betti numbers need t-free ideals");
  int bound = options.degree_bound < 0 ? default_degree_bound(initial) : options.degree_bound;
  FineBetti fb = fine_betti_numbers(initial, bound, prime);
  const int variables = ideal.ring().variable_count();
  bool monomial = std::all_of(gb.begin(), gb.end(), [](const auto& f) { return f.terms().size() == 1; });
  BettiTable t;
  if (monomial) {
    t = from_fine(fb, variables, bound);
  } else {
    // Semicontinuity: I has homology only where in(I) does, in I's grading.
    std::map<Degree, std::set<int>> candidates;
    for (const auto& [key, beta] : fb.entries) candidates[grading.degree(key.second)].insert(key.first);
    KoszulComplex<K> complex(ideal, grading, options.max_stratum);
    t.variables = variables;
    t.degree_bound = bound;
    t.truncated = fb.pruned;
    for (const auto& [c, rows] : candidates) {
      for (int i : rows) {
        long long h = complex.homology(i, c);
        if (h != 0) t.entries[{i, c[0]}] += h;
      }
    }
    finish(t);
  }
  t.prime = prime;
  t.seed = options.seed;
  return t;
}

}  // namespace

BettiTable betti_table(const Ideal<Rational>& ideal, const BettiOptions& options) {
  if (options.prime == 0) return compute(ideal, options, 0);
  ModP::Scope scope(options.prime);
  Ideal<ModP> reduced = algebra::reduce_mod_p(ideal);
  return compute(reduced, options, options.prime);
}

BettiTable betti_table(const Ideal<ModP>& ideal, const BettiOptions& options) {
  FieldContext<ModP>::Guard guard(ideal.context());
  return compute(ideal, options, ideal.context().prime);
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (ideal.is_unit()) throw DomainError("S/I is zero for the unit ideal");
  int bound = options.degree_bound < 0 ? default_degree_bound(ideal) : options.degree_bound;
  BettiTable t = from_fine(fine_betti_numbers(ideal, bound, options.prime), ideal.ring().variable_count(), bound);
  t.prime = options.prime;
  t.seed = options.seed;
  return t;
}

namespace {

template <class K>
bool composition_vanishes(KoszulComplex<K>& complex, int i, const Degree& c) {
  auto upper = complex.stratum(i, c);
  auto lower = complex.stratum(i - 1, c);
  for (const auto& col : upper.columns) {
    std::map<std::uint32_t, K> acc;
    for (const auto& [r, x] : col)
      for (const auto& [q, y] : lower.columns[r]) acc[q] += x * y;
    for (const auto& [q, z] : acc)
      if (!algebra::is_zero(z)) return false;
  }
  return true;
}

template <class K>
bool spot_check(const Ideal<K>& ideal, int pieces_per_index) {
  const auto& gb = ideal.groebner_basis();
  if (ideal.is_unit()) throw DomainError("S/I is zero for the unit ideal");
  Grading grading = finest_grading(ideal.ring(), gb);
  MonomialIdeal initial = ideal.initial_ideal();
  FineBetti fb = fine_betti_numbers(initial, default_degree_bound(initial), ModP::kDefaultPrime);
  std::map<int, std::set<Degree>> chosen;
  for (const auto& [key, beta] : fb.entries) {
    auto& set = chosen[key.first];
    if (static_cast<int>(set.size()) < pieces_per_index) set.insert(grading.degree(key.second));
  }
  KoszulComplex<K> complex(ideal, grading);
  const int variables = grading.variables;
  for (const auto& [i, degrees] : chosen)
    for (const Degree& c : degrees)
      for (int top : {i, i + 1})
        if (top >= 2 && top <= std::min(variables, c[0]) && !composition_vanishes(complex, top, c)) return false;
  return true;
}

}  // namespace

bool differentials_compose_to_zero(const Ideal<ModP>& ideal, int pieces_per_index) {
  FieldContext<ModP>::Guard guard(ideal.context());
  return spot_check(ideal, pieces_per_index);
}

bool differentials_compose_to_zero(const Ideal<Rational>& ideal, int pieces_per_index) {
  return spot_check(ideal, pieces_per_index);
}

bool differentials_compose_to_zero(const MonomialIdeal& ideal, int pieces_per_index) {
  std::vector<Polynomial<ModP>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(Polynomial<ModP>::monomial(g, ModP(1)));
  return differentials_compose_to_zero(Ideal<ModP>::from_reduced_basis(ideal.ring(), std::move(gens)),
                                       pieces_per_index);
}

bool dominated_by(const BettiTable& a, const BettiTable& b) {
  return std::all_of(a.entries.begin(), a.entries.end(), [&](const auto& e) {
    return e.second <= b.at(e.first.first, e.first.second);
  });
}

bool hilbert_consistency(const MonomialIdeal& initial, const BettiTable& table) {
  auto expected = algebra::hilbert_numerator(initial);
  auto actual = table.alternating_sum();
  while (!expected.empty() && expected.back() == 0) expected.pop_back();
  if (table.truncated) {
    std::size_t limit = static_cast<std::size_t>(table.degree_bound) + 1;
    if (expected.size() > limit) expected.resize(limit);
    if (actual.size() > limit) actual.resize(limit);
    while (!expected.empty() && expected.back() == 0) expected.pop_back();
    while (!actual.empty() && actual.back() == 0) actual.pop_back();
  }
  return expected == actual;
}

CertifiedBetti certified_betti_table(const Ideal<Rational>& ideal, std::uint32_t p1, std::uint32_t p2,
                                     const BettiOptions& options) {
  if (p1 == 0 || p2 == 0 || p1 == p2) throw DomainError("two distinct primes are required");
  CertifiedBetti out;
  BettiOptions o = options;
  o.prime = p1;
  out.table = betti_table(ideal, o);
  o.prime = p2;
  out.second = betti_table(ideal, o);
  out.primes_agree = out.table == out.second;
  if (!out.primes_agree) {
    o.prime = 0;
    out.table = betti_table(ideal, o);
    out.rational_fallback = true;
  }
  return out;
}

nlohmann::json to_json(const BettiTable& table) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [ij, beta] : table.entries) j[std::to_string(ij.first)][std::to_string(ij.second)] = beta;
  j["pd"] = table.pd;
  j["reg"] = table.reg;
  j["depth"] = table.depth;
  j["truncated"] = table.truncated;
  j["seed"] = table.seed;
  j["field"] = table.prime == 0 ? std::string("QQ") : "ZZ/" + std::to_string(table.prime);
  return j;
}

std::string to_text(const BettiTable& table) {
  int cols = table.pd + 1;
  int rows = table.reg + 1;
  std::vector<std::vector<std::string>> cells(rows + 2, std::vector<std::string>(cols + 1));
  cells[0][0] = "";
  cells[1][0] = "total:";
  for (int i = 0; i < cols; ++i) {
    cells[0][i + 1] = std::to_string(i);
    long long total = 0;
    for (const auto& [ij, beta] : table.entries)
      if (ij.first == i) total += beta;
    cells[1][i + 1] = std::to_string(total);
  }
  for (int r = 0; r < rows; ++r) {
    cells[r + 2][0] = std::to_string(r) + ":";
    for (int i = 0; i < cols; ++i) {
      long long beta = table.at(i, i + r);
      cells[r + 2][i + 1] = beta == 0 ? "." : std::to_string(beta);
    }
  }
  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& row : cells)
    for (int k = 0; k <= cols; ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (int k = 0; k <= cols; ++k) {
      std::string cell = row[k];
      std::string pad(width[k] - cell.size(), ' ');
      line += k == 0 ? pad + cell : " " + pad + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace binedge::oracle
