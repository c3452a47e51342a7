#include "binedge/algebra/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "binedge/algebra/polynomial.hpp"
#include "binedge/errors.hpp"

namespace binedge::algebra {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens)
    : ring_(ring), gens_(minimalize(std::move(gens))) {}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::involves_t() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.has_t(); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(u * v);
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 1) throw DomainError("ideal powers need k >= 1");
  MonomialIdeal r = a;
  for (int i = 1; i < k; ++i) r = product(r, a);
  return r;
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(u.lcm(v));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal quotient(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& u : a.generators()) gens.push_back(m.quotient_of(u.lcm(m)));
  return MonomialIdeal(a.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Hilbert numerators by pivot recursion

namespace {

using Poly = HilbertNumerator;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly add_shifted(Poly a, const Poly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
  trim(a);
  return a;
}

Poly one_minus_power(int d) {
  Poly p(d + 1, 0);
  p[0] = 1;
  p[d] -= 1;
  trim(p);
  return p;
}

// Minimal generators in, numerator out.
Poly numerator(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};

  // Variable-disjoint blocks multiply.
  std::uint32_t used = 0;
  bool pairwise_coprime = true;
  for (const auto& g : gens) {
    std::uint32_t s = g.support();
    if (used & s) pairwise_coprime = false;
    used |= s;
  }
  if (pairwise_coprime) {
    Poly r{1};
    for (const auto& g : gens) r = multiply(r, one_minus_power(g.degree()));
    return r;
  }
  {
    std::uint32_t block = gens.front().support();
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& g : gens) {
        std::uint32_t s = g.support();
        if ((s & block) && (s & ~block)) {
          block |= s;
          grew = true;
        }
      }
    }
    if (block != used) {
      std::vector<Monomial> inside, outside;
      for (const auto& g : gens) (g.support() & block ? inside : outside).push_back(g);
      return multiply(numerator(std::move(inside)), numerator(std::move(outside)));
    }
  }

  // Pivot x_v^e: v the most frequent variable (it occurs in at least two
  // generators), e its least positive exponent. Then x_v^e is not in M.
  int best_slot = -1, best_count = 0;
  for (int slot = 0; slot < Monomial::kSlots; ++slot) {
    int count = 0;
    for (const auto& g : gens) count += g.exponent(slot) > 0;
    if (count > best_count) {
      best_count = count;
      best_slot = slot;
    }
  }
  int e = Monomial::kMaxExponent;
  for (const auto& g : gens)
    if (g.exponent(best_slot) > 0) e = std::min(e, g.exponent(best_slot));
  Monomial pivot = Monomial::variable(best_slot, e);

  // N(M) = N(M + (p)) + z^deg(p) N(M : p)
  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(pivot.quotient_of(g.lcm(pivot)));
  Ring ring{};
  Poly a = numerator(MonomialIdeal(ring, std::move(with_pivot)).generators());
  Poly b = numerator(MonomialIdeal(ring, std::move(colon)).generators());
  return add_shifted(std::move(a), b, e);
}

}  // namespace

HilbertNumerator hilbert_numerator(const MonomialIdeal& m) {
  return numerator(m.generators());
}

HilbertNumerator shift_by_one_minus_z(HilbertNumerator h, int e) {
  for (; e > 0; --e) {
    h.push_back(0);
    for (std::size_t i = h.size() - 1; i > 0; --i) h[i] -= h[i - 1];
    trim(h);
  }
  for (; e < 0; ++e) {
    long long acc = 0;
    for (auto& c : h) {
      acc += c;
      c = acc;
    }
    if (acc != 0) throw DomainError("Hilbert numerator is not divisible by (1 - z)");
    trim(h);
  }
  return h;
}

int vanishing_order_at_one(HilbertNumerator h) {
  trim(h);
  if (h.empty()) throw DomainError("the zero numerator vanishes to infinite order");
  int order = 0;
  while (std::accumulate(h.begin(), h.end(), 0LL) == 0) {
    h = shift_by_one_minus_z(std::move(h), -1);
    ++order;
  }
  return order;
}

int krull_dimension(const MonomialIdeal& m, int variables) {
  if (variables < 0) variables = m.ring().variable_count() + (m.involves_t() ? 1 : 0);
  HilbertNumerator h = hilbert_numerator(m);
  if (h.empty()) return -1;
  return variables - vanishing_order_at_one(std::move(h));
}

std::string to_string(const MonomialIdeal& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_string(m.generators()[i], m.ring());
  }
  return out + ")";
}

std::string to_string(const HilbertNumerator& h) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < h.size(); ++d) {
    long long c = h[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (d == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << 'z';
      if (d > 1) os << '^' << d;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace binedge::algebra
