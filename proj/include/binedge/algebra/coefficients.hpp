#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace binedge::algebra {

// Element of the prime field F_p. The modulus is per thread and set by
// ModP::Scope; every value is kept in [0, p).
class ModP {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  ModP() = default;
  ModP(long long v);  // NOLINT: implicit from integers, like mpq_class

  static std::uint32_t modulus() { return modulus_; }

  // Installs a modulus for the current thread; restores the previous one.
  class Scope {
   public:
    explicit Scope(std::uint32_t p);
    ~Scope() { modulus_ = saved_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint32_t saved_;
  };

  std::uint32_t value() const { return v_; }
  // Representative in (-p/2, p/2].
  long long symmetric() const;

  friend ModP operator+(ModP a, ModP b) {
    std::uint32_t s = a.v_ + b.v_;
    return raw(s >= modulus_ ? s - modulus_ : s);
  }
  friend ModP operator-(ModP a, ModP b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + modulus_ - b.v_); }
  friend ModP operator-(ModP a) { return raw(a.v_ == 0 ? 0 : modulus_ - a.v_); }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % modulus_));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP inverse() const;

 private:
  static ModP raw(std::uint32_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }
  static inline thread_local std::uint32_t modulus_ = kDefaultPrime;
  std::uint32_t v_ = 0;
};

bool is_prime(std::uint32_t p);

using Rational = mpq_class;

inline bool is_zero(const ModP& a) { return a.value() == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const ModP& a) { return a.value() == 1; }
inline bool is_one(const Rational& a) { return a == 1; }
inline bool is_negative(const ModP& a) { return a.symmetric() < 0; }
inline bool is_negative(const Rational& a) { return sgn(a) < 0; }
inline ModP inverse(const ModP& a) { return a.inverse(); }
inline Rational inverse(const Rational& a) { return Rational(1) / a; }

std::string to_string(const ModP& a);
std::string to_string(const Rational& a);

// Reduction Q -> F_p; throws DomainError when p divides a denominator.
ModP reduce_mod_p(const Rational& a);

// Parses an unsigned decimal integer or fraction "a/b".
template <class K>
K parse_coefficient(std::string_view text);

// Captures whatever per-thread state a coefficient type depends on, so that
// deferred computations run in the context their inputs were built in.
template <class K>
struct FieldContext {
  static FieldContext current() { return {}; }
  struct Guard {
    explicit Guard(const FieldContext&) {}
  };
};

template <>
struct FieldContext<ModP> {
  std::uint32_t prime = ModP::kDefaultPrime;
  static FieldContext current() { return {ModP::modulus()}; }
  struct Guard {
    explicit Guard(const FieldContext& c) : scope(c.prime) {}
    ModP::Scope scope;
  };
};

}  // namespace binedge::algebra
