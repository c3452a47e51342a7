#include "binedge/algebra/coefficients.hpp"

#include <charconv>

#include "binedge/errors.hpp"

namespace binedge::algebra {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

ModP::ModP(long long v) {
  long long m = static_cast<long long>(modulus_);
  long long r = v % m;
  v_ = static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

ModP::Scope::Scope(std::uint32_t p) : saved_(modulus_) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw DomainError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  modulus_ = p;
}

long long ModP::symmetric() const {
  return v_ > modulus_ / 2 ? static_cast<long long>(v_) - modulus_ : v_;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw DomainError("division by zero in F_p");
  long long a = v_, m = modulus_, x0 = 1, x1 = 0;
  while (m != 0) {
    long long q = a / m;
    a -= q * m;
    std::swap(a, m);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  return ModP(x0);
}

std::string to_string(const ModP& a) { return std::to_string(a.symmetric()); }
std::string to_string(const Rational& a) { return a.get_str(); }

ModP reduce_mod_p(const Rational& a) {
  mpz_class p = ModP::modulus();
  mpz_class num = a.get_num() % p;
  mpz_class den = a.get_den() % p;
  if (den == 0) {
    throw DomainError("denominator of " + a.get_str() + " vanishes mod " + p.get_str());
  }
  return ModP(num.get_si()) / ModP(den.get_si());
}

namespace {

void check_digits(std::string_view s, std::string_view whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("malformed coefficient '" + std::string(whole) + "'");
  }
}

}  // namespace

template <>
Rational parse_coefficient<Rational>(std::string_view text) {
  auto slash = text.find('/');
  check_digits(text.substr(0, slash), text);
  if (slash != std::string_view::npos) check_digits(text.substr(slash + 1), text);
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw ParseError("malformed coefficient '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

template <>
ModP parse_coefficient<ModP>(std::string_view text) {
  return reduce_mod_p(parse_coefficient<Rational>(text));
}

}  // namespace binedge::algebra
