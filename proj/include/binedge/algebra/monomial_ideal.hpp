#pragma once

#include <string>
#include <vector>

#include "binedge/algebra/monomial.hpp"

namespace binedge::algebra {

// Monomial ideal held by its minimal generators, sorted decreasingly.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool contains(const Monomial& m) const;
  bool involves_t() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal quotient(const MonomialIdeal& a, const Monomial& m);

// Coefficients h_d of the numerator N(z) = sum h_d z^d of the standard
// graded Hilbert series HS(S/M) = N(z) / (1 - z)^N.
using HilbertNumerator = std::vector<long long>;

HilbertNumerator hilbert_numerator(const MonomialIdeal& m);
// Multiplies by (1 - z)^e; e may be negative when the division is exact.
HilbertNumerator shift_by_one_minus_z(HilbertNumerator h, int e);
// Order of vanishing of N at z = 1.
int vanishing_order_at_one(HilbertNumerator h);
// dim S/M for S with `variables` indeterminates (default 2n); -1 if M = S.
int krull_dimension(const MonomialIdeal& m, int variables = -1);

std::string to_string(const MonomialIdeal& m);
std::string to_string(const HilbertNumerator& h);

}  // namespace binedge::algebra
