#include "binedge/algebra/monomial.hpp"

#include <string>

#include "binedge/errors.hpp"

namespace binedge::algebra {

Monomial Monomial::variable(int slot, int exponent) {
  return Monomial{}.with_exponent(slot, exponent);
}

Monomial Monomial::with_exponent(int slot, int exponent) const {
  if (slot < 0 || slot >= kSlots) throw DomainError("monomial slot out of range");
  if (exponent < 0 || exponent > kMaxExponent) {
    throw CapacityError("exponent " + std::to_string(exponent) + " exceeds " +
                        std::to_string(kMaxExponent));
  }
  Monomial r = *this;
  std::uint64_t& w = slot < 8 ? r.hi_ : r.lo_;
  w &= ~(std::uint64_t{0xFF} << shift(slot));
  w |= std::uint64_t(exponent) << shift(slot);
  return r;
}

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (int slot = 0; slot < kSlots; ++slot) {
    if (exponent(slot) != 0) s |= 1U << slot;
  }
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = Monomial::from_words(a.hi_ + b.hi_, a.lo_ + b.lo_);
  // Bytes are below 128, so a carry into bit 7 flags overflow exactly.
  if (((r.hi_ | r.lo_) & Monomial::kHigh) != 0) {
    throw CapacityError("monomial exponent overflow (limit 127)");
  }
  return r;
}

Ring make_ring(int n) {
  if (n < 1 || n > Ring::kMaxVertices) {
    throw CapacityError("polynomial rings support 1 <= n <= " +
                        std::to_string(Ring::kMaxVertices) + " vertices, got " +
                        std::to_string(n));
  }
  return Ring{n};
}

}  // namespace binedge::algebra
