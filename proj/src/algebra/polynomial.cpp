#include "binedge/algebra/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "binedge/errors.hpp"

namespace binedge::algebra {

template <class K>
Polynomial<K>::Polynomial(const K& constant) {
  if (!algebra::is_zero(constant)) terms_.push_back({Monomial{}, constant});
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(const Monomial& m, const K& c) {
  Polynomial p;
  if (!algebra::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::from_terms(std::vector<Term<K>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term<K>& a, const Term<K>& b) { return a.m > b.m; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty() && algebra::is_zero(p.terms_.back().c)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && algebra::is_zero(p.terms_.back().c)) p.terms_.pop_back();
  return p;
}

template <class K>
int Polynomial<K>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

template <class K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.m.degree() != terms_.front().m.degree()) return false;
  }
  return true;
}

template <class K>
bool Polynomial<K>::involves_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term<K>& t) { return t.m.has_t(); });
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (terms_.empty()) return *this;
  return scaled(algebra::inverse(terms_.front().c));
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const K& c) const {
  if (algebra::is_zero(c)) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::times(const Monomial& m, const K& c) const {
  if (algebra::is_zero(c)) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.m = t.m * m;
    t.c *= c;
  }
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::pow(int k) const {
  if (k < 0) throw DomainError("negative polynomial exponent");
  Polynomial result(K(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

template <class K>
void Polynomial<K>::add_scaled(const Polynomial& g, const K& c, const Monomial& m) {
  if (g.terms_.empty() || algebra::is_zero(c)) return;
  std::vector<Term<K>> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial gm = g.terms_[j].m * m;
    if (i < terms_.size() && terms_[i].m > gm) {
      out.push_back(std::move(terms_[i++]));
    } else if (i < terms_.size() && terms_[i].m == gm) {
      K sum = terms_[i].c + c * g.terms_[j].c;
      if (!algebra::is_zero(sum)) out.push_back({gm, std::move(sum)});
      ++i;
      ++j;
    } else {
      out.push_back({gm, c * g.terms_[j].c});
      ++j;
    }
  }
  terms_ = std::move(out);
}

template <class K>
std::optional<Polynomial<K>> Polynomial<K>::divide_exact(const Polynomial& g) const {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial rest = *this;
  std::vector<Term<K>> q;
  const Monomial& lm = g.leading_monomial();
  K inv = algebra::inverse(g.leading_coefficient());
  while (!rest.is_zero()) {
    const Term<K>& lt = rest.terms_.front();
    if (!lm.divides(lt.m)) return std::nullopt;
    Monomial qm = lm.quotient_of(lt.m);
    K qc = lt.c * inv;
    q.push_back({qm, qc});
    rest.add_scaled(g, -qc, qm);
  }
  Polynomial r;
  r.terms_ = std::move(q);  // quotient terms arrive in decreasing order
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::multiply(const Polynomial& b) const {
  if (terms_.empty() || b.terms_.empty()) return {};
  std::vector<Term<K>> prod;
  prod.reserve(terms_.size() * b.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : b.terms_) prod.push_back({s.m * t.m, s.c * t.c});
  return from_terms(std::move(prod));
}

template class Polynomial<ModP>;
template class Polynomial<Rational>;

// ---------------------------------------------------------------------------
// Text

namespace {

std::string slot_name(int slot, const Ring& ring) {
  if (slot == 0) return "t";
  if (slot <= ring.n) return "x" + std::to_string(slot);
  return "y" + std::to_string(slot - ring.n);
}

}  // namespace

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (int slot = 0; slot < Monomial::kSlots; ++slot) {
    int e = m.exponent(slot);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += slot_name(slot, ring);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

template <class K>
std::string to_string(const Polynomial<K>& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = is_negative(t.c);
    K mag = neg ? K(-t.c) : t.c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.m.is_one()) {
      out += to_string(mag);
    } else if (is_one(mag)) {
      out += to_string(t.m, ring);
    } else {
      out += to_string(mag) + "*" + to_string(t.m, ring);
    }
  }
  return out;
}

template std::string to_string(const Polynomial<ModP>&, const Ring&);
template std::string to_string(const Polynomial<Rational>&, const Ring&);

namespace {

template <class K>
class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  Polynomial<K> parse() {
    Polynomial<K> p = expression();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in polynomial '" +
                     std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  int small_integer() {
    skip_ws();
    auto d = digits();
    if (d.empty() || d.size() > 4) fail("expected a small non-negative integer");
    return std::stoi(std::string(d));
  }

  Polynomial<K> expression() {
    Polynomial<K> acc;
    bool neg = accept('-');
    if (!neg) accept('+');
    acc = neg ? -product() : product();
    while (true) {
      if (accept('+')) {
        acc = acc + product();
      } else if (accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> product() {
    Polynomial<K> acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial<K> power() {
    Polynomial<K> base = atom();
    if (accept('^')) return base.pow(small_integer());
    return base;
  }

  Polynomial<K> atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (digits().empty()) fail("expected denominator");
      }
      return Polynomial<K>(parse_coefficient<K>(s_.substr(start, pos_ - start)));
    }
    if (c == 't') {
      ++pos_;
      return Polynomial<K>::variable(0);
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
      auto d = digits();
      if (d.empty() || d.size() > 2) fail("expected a variable index");
      int i = std::stoi(std::string(d));
      if (i < 1 || i > ring_.n) {
        fail("variable index " + std::to_string(i) + " outside 1.." + std::to_string(ring_.n));
      }
      return Polynomial<K>::variable(c == 'x' ? ring_.x(i) : ring_.y(i));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const Ring& ring) {
  return PolyParser<K>(text, ring).parse();
}

template Polynomial<ModP> parse_polynomial(std::string_view, const Ring&);
template Polynomial<Rational> parse_polynomial(std::string_view, const Ring&);

Polynomial<ModP> reduce_mod_p(const Polynomial<Rational>& f) {
  std::vector<Term<ModP>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.m, reduce_mod_p(t.c)});
  return Polynomial<ModP>::from_terms(std::move(terms));
}

template <class K>
Polynomial<K> minor2(const Ring& ring, int i, int j) {
  Monomial a = Monomial::variable(ring.x(i)) * Monomial::variable(ring.y(j));
  Monomial b = Monomial::variable(ring.x(j)) * Monomial::variable(ring.y(i));
  return Polynomial<K>::from_terms({{a, K(1)}, {b, K(-1)}});
}

template Polynomial<ModP> minor2(const Ring&, int, int);
template Polynomial<Rational> minor2(const Ring&, int, int);

}  // namespace binedge::algebra
