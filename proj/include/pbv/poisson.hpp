#pragma once

#include "pbv/exterior.hpp"

#include <map>
#include <optional>
#include <utility>

namespace pbv {

/// Poisson structure given by its bracket table {x_i, x_j} for i < j, with
/// the induced bivector pi stored canonically.
struct PoissonStructure {
  PresPtr pres;
  std::map<std::pair<unsigned, unsigned>, Poly> table;
  Multivector pi;
};

PoissonStructure make_poisson(const PresPtr& pres,
                              std::map<std::pair<unsigned, unsigned>, Poly> table);

/// Bracket of representatives by Leibniz expansion of the table with plain
/// partial derivatives; used for validation independently of the dual basis.
Poly table_bracket(const PoissonStructure& ps, const Poly& a, const Poly& b);

/// Checks the Jacobi identity on generator triples, compatibility with the
/// relations ({rho, x_j} = 0), and [pi, pi]_SN = 0 as an independent path.
ValidationReport validate_poisson(const PoissonStructure& ps);

Poly bracket(const PoissonStructure& ps, const Poly& a, const Poly& b);

/// Hamiltonian vector field H_a = {a, -}.
Multivector hamiltonian(const PoissonStructure& ps, const Poly& a);

/// A derivation phi with [pi, phi]_SN = 0; construct via poisson_derivation,
/// which enforces the cocycle condition.
struct PoissonDerivation {
  Multivector phi;
};

/// Throws NotPoissonDerivation unless delta(phi) = 0.
PoissonDerivation poisson_derivation(const PoissonStructure& ps, const Multivector& phi);

/// Poisson cohomology differential [pi, -]_SN, twisted to
/// [pi, -]_SN - phi ^ - when a Poisson derivation is supplied.
Multivector cochain_delta(const PoissonStructure& ps, const Multivector& F,
                          const std::optional<PoissonDerivation>& phi = std::nullopt);

/// Poisson homology differential iota_pi d - d iota_pi, twisted by + iota_phi.
KForm chain_partial(const PoissonStructure& ps, const KForm& omega,
                    const std::optional<PoissonDerivation>& phi = std::nullopt);

} // namespace pbv
