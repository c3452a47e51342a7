#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace binedge::algebra {

// Exponent vector over at most 16 variables, one byte per slot, packed so
// that comparing (hi, lo) as unsigned integers is the lexicographic order.
// Slot 0 is the elimination variable t; for a ring on n vertices slot i is
// x_i and slot n+i is y_i. Every exponent stays below 128.
class Monomial {
 public:
  static constexpr int kSlots = 16;
  static constexpr int kMaxExponent = 127;

  constexpr Monomial() = default;

  static Monomial variable(int slot, int exponent = 1);

  int exponent(int slot) const {
    std::uint64_t w = slot < 8 ? hi_ : lo_;
    return static_cast<int>((w >> shift(slot)) & 0xFF);
  }
  Monomial with_exponent(int slot, int exponent) const;

  bool is_one() const { return hi_ == 0 && lo_ == 0; }
  int degree() const { return byte_sum(hi_) + byte_sum(lo_); }
  // Degree ignoring the elimination slot.
  int degree_without_t() const { return degree() - exponent(0); }
  bool has_t() const { return exponent(0) != 0; }

  // Bit s is set iff slot s has a nonzero exponent.
  std::uint32_t support() const;

  bool divides(const Monomial& b) const {
    return (((b.hi_ | kHigh) - hi_) & kHigh) == kHigh &&
           (((b.lo_ | kHigh) - lo_) & kHigh) == kHigh;
  }
  bool coprime(const Monomial& b) const {
    return (nonzero(hi_) & nonzero(b.hi_)) == 0 && (nonzero(lo_) & nonzero(b.lo_)) == 0;
  }
  Monomial lcm(const Monomial& b) const {
    return from_words(byte_max(hi_, b.hi_), byte_max(lo_, b.lo_));
  }
  Monomial gcd(const Monomial& b) const {
    return from_words(byte_min(hi_, b.hi_), byte_min(lo_, b.lo_));
  }
  // Requires *this | b.
  Monomial quotient_of(const Monomial& b) const { return from_words(b.hi_ - hi_, b.lo_ - lo_); }

  // Throws CapacityError when an exponent would reach 128.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(hi_ * 0x9E3779B97F4A7C15ULL ^ lo_);
  }

 private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
  static constexpr std::uint64_t kLow = 0x0101010101010101ULL;

  static constexpr int shift(int slot) { return (7 - slot % 8) * 8; }
  static Monomial from_words(std::uint64_t hi, std::uint64_t lo) {
    Monomial m;
    m.hi_ = hi;
    m.lo_ = lo;
    return m;
  }
  static std::uint64_t nonzero(std::uint64_t w) { return ((w | kHigh) - kLow) & kHigh; }
  static std::uint64_t ge_mask(std::uint64_t a, std::uint64_t b) {
    std::uint64_t bits = ((a | kHigh) - b) & kHigh;  // high bit set where a >= b
    return (bits >> 7) * 0xFF;
  }
  static std::uint64_t byte_max(std::uint64_t a, std::uint64_t b) {
    std::uint64_t m = ge_mask(a, b);
    return (a & m) | (b & ~m);
  }
  static std::uint64_t byte_min(std::uint64_t a, std::uint64_t b) {
    std::uint64_t m = ge_mask(a, b);
    return (b & m) | (a & ~m);
  }
  static int byte_sum(std::uint64_t w) {
    w = (w & 0x00FF00FF00FF00FFULL) + ((w >> 8) & 0x00FF00FF00FF00FFULL);
    w = (w & 0x0000FFFF0000FFFFULL) + ((w >> 16) & 0x0000FFFF0000FFFFULL);
    return static_cast<int>((w & 0xFFFFFFFFULL) + (w >> 32));
  }

  std::uint64_t hi_ = 0;  // slots 0..7, slot 0 most significant
  std::uint64_t lo_ = 0;  // slots 8..15
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Variable layout of S = K[x_1..x_n, y_1..y_n] (plus t in slot 0).
struct Ring {
  static constexpr int kMaxVertices = 7;
  int n = 0;

  int x(int i) const { return i; }
  int y(int i) const { return n + i; }
  int variable_count() const { return 2 * n; }
  // Slots 1..2n as a support bitmask.
  std::uint32_t variable_mask() const { return ((1U << (2 * n)) - 1) << 1; }

  friend bool operator==(const Ring&, const Ring&) = default;
};

// Validates n against the packed layout; throws CapacityError past 7.
Ring make_ring(int n);

}  // namespace binedge::algebra

template <>
struct std::hash<binedge::algebra::Monomial> {
  std::size_t operator()(const binedge::algebra::Monomial& m) const { return m.hash(); }
};
