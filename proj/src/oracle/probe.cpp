#include <random>

#include "binedge/errors.hpp"
#include "binedge/oracle.hpp"

namespace binedge::oracle {

namespace {

Polynomial<ModP> random_linear_form(std::mt19937_64& rng, int variables) {
  std::uniform_int_distribution<std::uint32_t> coeff(1, ModP::modulus() - 1);
  Polynomial<ModP> form;
  for (int v = 1; v <= variables; ++v) form = form + Polynomial<ModP>::variable(v).scaled(ModP(coeff(rng)));
  return form;
}

algebra::HilbertNumerator trimmed(algebra::HilbertNumerator h) {
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace

// With M_s = S/(I + l_1..l_s) and K_s = 0 :_{M_{s-1}} l_s,
// HS(M_t) = (1-z)^t HS(M_0) + sum_s z (1-z)^{t-s} HS(K_s), and the lowest
// nonzero K_s leaves a positive term. So l_1..l_t is regular iff
// HS(M_t) = (1-z)^t HS(M_0), and regular prefixes are closed downward.
DepthProbe depth_probe_generic_forms(const Ideal<ModP>& ideal, int trials, std::uint64_t seed) {
  if (trials < 2) throw DomainError("the depth probe needs at least two trials");
  algebra::FieldContext<ModP>::Guard guard(ideal.context());
  if (ideal.is_unit()) throw DomainError("S/I is zero for the unit ideal");
  DepthProbe probe{0, trials, seed, ideal.context().prime};
  const int variables = ideal.ring().variable_count();
  const auto base = trimmed(algebra::hilbert_numerator(ideal.initial_ideal()));
  // depth <= dim, so no sequence longer than dim is regular.
  const int dim = algebra::krull_dimension(ideal);
  for (int trial = 0; trial < trials && probe.depth < dim; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::vector<Polynomial<ModP>> forms;
    for (int s = 0; s < dim; ++s) forms.push_back(random_linear_form(rng, variables));
    // Long prefixes eliminate many variables and are cheap, so search downward.
    for (int t = dim; t > probe.depth; --t) {
      std::vector<Polynomial<ModP>> gens = ideal.groebner_basis();
      gens.insert(gens.end(), forms.begin(), forms.begin() + t);
      Ideal<ModP> cut(ideal.ring(), std::move(gens), ideal.options());
      if (trimmed(algebra::hilbert_numerator(cut.initial_ideal())) == trimmed(algebra::shift_by_one_minus_z(base, t))) {
        probe.depth = t;
        break;
      }
    }
  }
  return probe;
}

DepthProbe depth_probe_generic_forms(const Ideal<Rational>& ideal, int trials, std::uint64_t seed,
                                     std::uint32_t prime) {
  ModP::Scope scope(prime);
  return depth_probe_generic_forms(algebra::reduce_mod_p(ideal), trials, seed);
}

DepthProbe depth_probe_generic_forms(const MonomialIdeal& ideal, int trials, std::uint64_t seed,
                                     std::uint32_t prime) {
  ModP::Scope scope(prime);
  std::vector<Polynomial<ModP>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(Polynomial<ModP>::monomial(g, ModP(1)));
  auto as_ideal = Ideal<ModP>::from_reduced_basis(ideal.ring(), std::move(gens));
  return depth_probe_generic_forms(as_ideal, trials, seed);
}

}  // namespace binedge::oracle
