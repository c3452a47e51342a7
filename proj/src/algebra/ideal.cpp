#include "binedge/algebra/ideal.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "binedge/errors.hpp"

namespace binedge::algebra {

template <class K>
Ideal<K>::Ideal(Ring ring, std::vector<Poly> gens, GbOptions options)
    : ring_(ring),
      options_(options),
      context_(FieldContext<K>::current()),
      cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

template <class K>
Ideal<K> Ideal<K>::from_reduced_basis(Ring ring, std::vector<Poly> basis, GbOptions options) {
  Ideal ideal(ring, basis, options);
  std::call_once(ideal.cache_->once, [&] { ideal.cache_->basis = std::move(basis); });
  return ideal;
}

template <class K>
const std::vector<Polynomial<K>>& Ideal<K>::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    typename FieldContext<K>::Guard guard(context_);
    cache_->basis = buchberger(gens_, options_);
  });
  return cache_->basis;
}

template <class K>
MonomialIdeal Ideal<K>::initial_ideal() const {
  std::vector<Monomial> lead;
  for (const auto& g : groebner_basis()) lead.push_back(g.leading_monomial());
  return MonomialIdeal(ring_, std::move(lead));
}

template <class K>
Polynomial<K> Ideal<K>::normal_form(const Poly& f) const {
  return Reducer<K>(groebner_basis()).normal_form(f);
}

template <class K>
bool Ideal<K>::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Poly& g) { return contains(g); });
}

template <class K>
bool Ideal<K>::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().leading_monomial().is_one();
}

template class Ideal<ModP>;
template class Ideal<Rational>;

// ---------------------------------------------------------------------------

template <class K>
Ideal<K> sum(const Ideal<K>& a, const Ideal<K>& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<K>(a.ring(), std::move(gens), a.options());
}

namespace {

template <class K>
std::vector<Polynomial<K>> deduplicate(std::vector<Polynomial<K>> polys) {
  auto key_less = [](const Polynomial<K>& p, const Polynomial<K>& q) {
    const auto& a = p.terms();
    const auto& b = q.terms();
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (a[i].m != b[i].m) return a[i].m > b[i].m;
    }
    return a.size() < b.size();
  };
  // Only monomial support is compared for ordering; equality is exact.
  std::stable_sort(polys.begin(), polys.end(), key_less);
  std::vector<Polynomial<K>> out;
  for (auto& p : polys) {
    bool seen = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (key_less(*it, p)) break;
      if (*it == p) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

template <class K>
Ideal<K> product(const Ideal<K>& a, const Ideal<K>& b) {
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal<K>(a.ring(), deduplicate(std::move(gens)), a.options());
}

template <class K>
Ideal<K> power(const Ideal<K>& a, int k) {
  if (k < 1) throw DomainError("ideal powers need k >= 1");
  const auto& g = a.generators();
  std::vector<Polynomial<K>> gens;
  // Multisets i_1 <= ... <= i_k, with prefix products reused.
  std::vector<std::size_t> idx;
  std::vector<Polynomial<K>> prefix;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == static_cast<std::size_t>(k)) {
      gens.push_back(prefix.back());
      return;
    }
    for (std::size_t i = start; i < g.size(); ++i) {
      idx.push_back(i);
      prefix.push_back(prefix.empty() ? g[i] : prefix.back() * g[i]);
      self(self, i);
      prefix.pop_back();
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return Ideal<K>(a.ring(), deduplicate(std::move(gens)), a.options());
}

template <class K>
Ideal<K> intersection(const Ideal<K>& a, const Ideal<K>& b) {
  if (!(a.ring() == b.ring())) throw DomainError("intersection of ideals in different rings");
  if (a.generators().empty()) return a;
  if (b.generators().empty()) return b;
  using Poly = Polynomial<K>;
  Poly t = Poly::variable(0);
  Poly one_minus_t = Poly(K(1)) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) {
    if (f.involves_t()) throw DomainError("intersection inputs must not involve t");
    gens.push_back(t * f);
  }
  for (const auto& g : b.generators()) {
    if (g.involves_t()) throw DomainError("intersection inputs must not involve t");
    gens.push_back(one_minus_t * g);
  }
  std::vector<Poly> basis = buchberger(std::move(gens), a.options());
  std::erase_if(basis, [](const Poly& p) { return p.involves_t(); });
  // The t-free part of a reduced basis for an elimination order is reduced.
  return Ideal<K>::from_reduced_basis(a.ring(), std::move(basis), a.options());
}

template <class K>
Ideal<K> intersection(std::span<const Ideal<K>> ideals) {
  if (ideals.empty()) throw DomainError("intersection of no ideals");
  Ideal<K> acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersection(acc, ideals[i]);
  return acc;
}

template <class K>
Ideal<K> quotient(const Ideal<K>& a, const Polynomial<K>& f) {
  if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
  if (a.contains(f)) {
    return Ideal<K>::from_reduced_basis(a.ring(), {Polynomial<K>(K(1))}, a.options());
  }
  Ideal<K> principal(a.ring(), {f}, a.options());
  Ideal<K> meet = intersection(a, principal);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : meet.groebner_basis()) {
    auto q = g.divide_exact(f);
    if (!q) throw std::logic_error("element of a cap (f) is not divisible by f");
    gens.push_back(std::move(*q));
  }
  // Dividing a Groebner basis of a cap (f) by f gives one of (a : f).
  return Ideal<K>::from_reduced_basis(a.ring(), interreduce(std::move(gens)), a.options());
}

template <class K>
Ideal<K> quotient(const Ideal<K>& a, const Ideal<K>& b) {
  if (b.generators().empty()) {
    return Ideal<K>::from_reduced_basis(a.ring(), {Polynomial<K>(K(1))}, a.options());
  }
  std::vector<Ideal<K>> parts;
  for (const auto& g : b.generators()) parts.push_back(quotient(a, g));
  return intersection(std::span<const Ideal<K>>(parts));
}

template <class K>
HilbertNumerator hilbert_numerator(const Ideal<K>& a) {
  return hilbert_numerator(a.initial_ideal());
}

template <class K>
int krull_dimension(const Ideal<K>& a) {
  if (a.is_zero()) return a.ring().variable_count();
  return krull_dimension(a.initial_ideal(), a.ring().variable_count());
}

Ideal<ModP> reduce_mod_p(const Ideal<Rational>& a) {
  std::vector<Polynomial<ModP>> gens;
  for (const auto& g : a.generators()) gens.push_back(reduce_mod_p(g));
  return Ideal<ModP>(a.ring(), std::move(gens), a.options());
}

template <class K>
std::string to_json(const Ideal<K>& a) {
  nlohmann::json j;
  j["n"] = a.ring().n;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : a.generators()) j["generators"].push_back(to_string(g, a.ring()));
  return j.dump();
}

template <class K>
Ideal<K> ideal_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("generators") || !j["generators"].is_array()) {
    throw ParseError("ideal JSON needs an integer 'n' and a 'generators' array");
  }
  Ring ring = make_ring(j["n"].get<int>());
  std::vector<Polynomial<K>> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("ideal generators must be strings");
    gens.push_back(parse_polynomial<K>(g.get<std::string>(), ring));
  }
  return Ideal<K>(ring, std::move(gens));
}

#define BINEDGE_INSTANTIATE(K)                                                   \
  template Ideal<K> sum(const Ideal<K>&, const Ideal<K>&);                       \
  template Ideal<K> product(const Ideal<K>&, const Ideal<K>&);                   \
  template Ideal<K> power(const Ideal<K>&, int);                                 \
  template Ideal<K> intersection(const Ideal<K>&, const Ideal<K>&);              \
  template Ideal<K> intersection(std::span<const Ideal<K>>);                     \
  template Ideal<K> quotient(const Ideal<K>&, const Polynomial<K>&);             \
  template Ideal<K> quotient(const Ideal<K>&, const Ideal<K>&);                  \
  template HilbertNumerator hilbert_numerator(const Ideal<K>&);                  \
  template int krull_dimension(const Ideal<K>&);                                 \
  template std::string to_json(const Ideal<K>&);                                 \
  template Ideal<K> ideal_from_json(std::string_view);

BINEDGE_INSTANTIATE(ModP)
BINEDGE_INSTANTIATE(Rational)

#undef BINEDGE_INSTANTIATE

}  // namespace binedge::algebra
