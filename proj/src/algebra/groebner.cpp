#include "binedge/algebra/groebner.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <tuple>

#include "binedge/errors.hpp"

namespace binedge::algebra {

template <class K>
Reducer<K>::Reducer(std::vector<const Polynomial<K>*> basis) : basis_(std::move(basis)) {
  leading_.reserve(basis_.size());
  for (const auto* g : basis_) {
    if (g->is_zero()) throw DomainError("zero polynomial in a reduction basis");
    leading_.push_back(g->leading_monomial());
  }
}

template <class K>
Reducer<K>::Reducer(const std::vector<Polynomial<K>>& basis)
    : Reducer([&] {
        std::vector<const Polynomial<K>*> ptrs;
        ptrs.reserve(basis.size());
        for (const auto& g : basis) ptrs.push_back(&g);
        return ptrs;
      }()) {}

template <class K>
int Reducer<K>::find_divisor(const Monomial& m) const {
  for (std::size_t i = 0; i < leading_.size(); ++i) {
    if (leading_[i].divides(m)) return static_cast<int>(i);
  }
  return -1;
}

template <class K>
Polynomial<K> Reducer<K>::normal_form(Polynomial<K> p) const {
  std::vector<Term<K>> rem;
  while (!p.is_zero()) {
    const Term<K>& lt = p.terms().front();
    int d = find_divisor(lt.m);
    if (d < 0) {
      rem.push_back(lt);
      p.pop_leading();
      continue;
    }
    const Polynomial<K>& g = *basis_[d];
    K c = lt.c / g.leading_coefficient();
    p.add_scaled(g, -c, leading_[d].quotient_of(lt.m));
  }
  // Remainder terms were emitted in decreasing order.
  return Polynomial<K>::from_terms(std::move(rem));
}

template <class K>
bool Reducer<K>::reduces_to_zero(Polynomial<K> p) const {
  while (!p.is_zero()) {
    const Term<K>& lt = p.terms().front();
    int d = find_divisor(lt.m);
    if (d < 0) return false;
    const Polynomial<K>& g = *basis_[d];
    K c = lt.c / g.leading_coefficient();
    p.add_scaled(g, -c, leading_[d].quotient_of(lt.m));
  }
  return true;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial<K> s = f.times(f.leading_monomial().quotient_of(l),
                            inverse(f.leading_coefficient()));
  s.add_scaled(g, -inverse(g.leading_coefficient()), g.leading_monomial().quotient_of(l));
  return s;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
  return Reducer<K>(basis).normal_form(f);
}

namespace {

int weight(const Monomial& m) { return m.degree_without_t(); }

template <class K>
int sugar_of(const Polynomial<K>& f) {
  int s = 0;
  for (const auto& t : f.terms()) s = std::max(s, weight(t.m));
  return s;
}

struct Pair {
  int sugar;
  Monomial lcm;
  int i, j;  // i < j, indices into the store

  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.sugar, a.lcm, a.i, a.j) < std::tie(b.sugar, b.lcm, b.i, b.j);
  }
};

template <class K>
class Buchberger {
 public:
  explicit Buchberger(const GbOptions& options) : options_(options) {}

  std::vector<Polynomial<K>> run(std::vector<Polynomial<K>> gens) {
    std::vector<Polynomial<K>> inputs;
    for (auto& g : gens) {
      if (!g.is_zero()) inputs.push_back(g.monic());
    }
    std::stable_sort(inputs.begin(), inputs.end(), [](const auto& a, const auto& b) {
      return a.leading_monomial() < b.leading_monomial();
    });
    for (auto& g : inputs) {
      auto h = reduce(g);
      if (!h.is_zero()) insert(h.monic(), sugar_of(g));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++processed > options_.max_pairs) {
        throw CapacityError("Buchberger exceeded the pair budget of " +
                            std::to_string(options_.max_pairs));
      }
      auto h = reduce(s_polynomial(store_[p.i], store_[p.j]));
      if (!h.is_zero()) insert(h.monic(), p.sugar);
    }
    std::vector<Polynomial<K>> basis;
    for (int idx : active_) basis.push_back(store_[idx]);
    return interreduce(std::move(basis));
  }

 private:
  Polynomial<K> reduce(const Polynomial<K>& f) {
    if (!reducer_) {
      std::vector<const Polynomial<K>*> ptrs;
      for (int idx : active_) ptrs.push_back(&store_[idx]);
      reducer_.emplace(std::move(ptrs));
    }
    return reducer_->normal_form(f);
  }

  void insert(Polynomial<K> h, int sugar) {
    if (store_.size() >= options_.max_basis) {
      throw CapacityError("Buchberger exceeded the basis budget of " +
                          std::to_string(options_.max_basis));
    }
    if (h.degree() > options_.max_degree) {
      throw CapacityError("Buchberger produced degree " + std::to_string(h.degree()) +
                          " above the budget of " + std::to_string(options_.max_degree));
    }
    int hi = static_cast<int>(store_.size());
    const Monomial lh = h.leading_monomial();
    store_.push_back(std::move(h));
    sugar_.push_back(sugar);

    // Gebauer-Moeller: new pairs first, chain criterion among themselves.
    struct Candidate {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    for (int g : active_) {
      const Monomial& lg = store_[g].leading_monomial();
      fresh.push_back({g, lg.lcm(lh), lg.coprime(lh)});
    }
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Candidate& p = fresh[a];
      bool dominated = false;
      if (!p.coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b)
          dominated = fresh[b].lcm.divides(p.lcm);
        for (const auto& q : kept) dominated = dominated || q.lcm.divides(p.lcm);
      }
      if (!dominated) kept.push_back(p);
    }

    // Old pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& li = store_[it->i].leading_monomial();
      const Monomial& lj = store_[it->j].leading_monomial();
      if (lh.divides(it->lcm) && li.lcm(lh) != it->lcm && lj.lcm(lh) != it->lcm) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    for (const auto& p : kept) {
      if (p.coprime) continue;
      const Monomial& lg = store_[p.g].leading_monomial();
      int s = std::max(sugar_[p.g] + weight(p.lcm) - weight(lg),
                       sugar + weight(p.lcm) - weight(lh));
      pairs_.insert({s, p.lcm, p.g, hi});
    }

    std::erase_if(active_, [&](int g) { return lh.divides(store_[g].leading_monomial()); });
    active_.push_back(hi);
    reducer_.reset();
  }

  GbOptions options_;
  std::deque<Polynomial<K>> store_;  // stable addresses for the reducer
  std::vector<int> sugar_;
  std::vector<int> active_;
  std::optional<Reducer<K>> reducer_;
  std::set<Pair> pairs_;
};

}  // namespace

template <class K>
std::vector<Polynomial<K>> buchberger(std::vector<Polynomial<K>> gens, const GbOptions& options) {
  return Buchberger<K>(options).run(std::move(gens));
}

template <class K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& gens) {
  std::vector<Polynomial<K>> basis;
  for (const auto& g : gens) {
    if (!g.is_zero()) basis.push_back(g);
  }
  Reducer<K> reducer(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
      if (!reducer.reduces_to_zero(s_polynomial(basis[i], basis[j]))) return false;
    }
  }
  return true;
}

template <class K>
std::vector<Polynomial<K>> interreduce(std::vector<Polynomial<K>> basis) {
  std::erase_if(basis, [](const auto& g) { return g.is_zero(); });
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  // Minimalize: drop elements whose leading monomial is a multiple of another's.
  std::vector<Polynomial<K>> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(g.monic());
  }
  // No tail term is a multiple of its own leading monomial (it is smaller),
  // so reducing against the whole minimal set is the same as against the rest.
  Reducer<K> reducer(minimal);
  std::vector<Polynomial<K>> reduced;
  reduced.reserve(minimal.size());
  for (const auto& f : minimal) {
    Polynomial<K> tail = f;
    Term<K> lead = tail.terms().front();
    tail.pop_leading();
    Polynomial<K> g = reducer.normal_form(tail);
    g.add_scaled(Polynomial<K>::monomial(lead.m, lead.c), K(1), Monomial{});
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return reduced;
}

#define BINEDGE_INSTANTIATE(K)                                                              \
  template class Reducer<K>;                                                                \
  template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&);          \
  template Polynomial<K> normal_form(const Polynomial<K>&, const std::vector<Polynomial<K>>&); \
  template std::vector<Polynomial<K>> buchberger(std::vector<Polynomial<K>>, const GbOptions&); \
  template bool is_groebner_basis(const std::vector<Polynomial<K>>&);                       \
  template std::vector<Polynomial<K>> interreduce(std::vector<Polynomial<K>>);

BINEDGE_INSTANTIATE(ModP)
BINEDGE_INSTANTIATE(Rational)

#undef BINEDGE_INSTANTIATE

}  // namespace binedge::algebra
