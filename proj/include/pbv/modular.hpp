#pragma once

#include "pbv/poisson.hpp"

#include <optional>

namespace pbv {

/// Modular derivation split into its dual-basis part phi1 and its volume
/// part phi2: phi1(a) = sum_s (dx_s)*({a, x_s}), phi2(a) = sum_I {a, a_I} b_I.
struct ModularData {
  Multivector phi;
  Multivector phi1;
  Multivector phi2;
};

ModularData modular_derivation(const PoissonStructure& ps);

/// Definitional value phi_vol(a) = L_{H_a}(vol) / vol; throws
/// DivisionInconsistent when the Lie derivative is not a multiple of vol
/// (corrupt volume data).
Poly modular_oracle(const PoissonStructure& ps, const Poly& a);

/// Searches u of degree <= D with H_u = target; returns none when the exact
/// linear system is infeasible for every degree bound 0..D.
std::optional<Poly> hamiltonian_witness(const PoissonStructure& ps, const Multivector& target,
                                        unsigned max_degree);

/// Searches a closed 1-form w of coefficient degree <= D with
/// iota_w(pi) equal to the modular derivation.
std::optional<KForm> pseudo_unimodular_witness(const PoissonStructure& ps, unsigned max_degree);

/// Monomials of total degree <= d that are irreducible under the rewrite
/// rules; deterministic (graded lex) order. The coordinate space for all
/// bounded-degree witness searches.
std::vector<Monomial> reduced_monomials(const Presentation& pres, unsigned max_degree);

} // namespace pbv
