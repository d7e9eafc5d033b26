#pragma once

#include "pbv/poisson.hpp"

namespace pbv {

/// Duality data: the volume form vol and its dual multivector vol*, with
/// <vol*, vol> = 1.
struct DualityContext {
  PresPtr pres;
  KForm vol;
  Multivector vol_star;
};

DualityContext make_duality(const PresPtr& pres);

/// F -> iota_F(vol): X^p -> Omega^{n-p}.
KForm ddag(const DualityContext& ctx, const Multivector& F);

/// omega -> iota_omega(vol*): Omega^{n-p} -> X^p; inverse of ddag.
Multivector flat(const DualityContext& ctx, const KForm& omega);

/// Signed duality (-1)^{p(p+1)/2} ddag, the map that makes the twisted
/// chain/cochain square commute.
KForm dag(const DualityContext& ctx, const Multivector& F);

/// Checks that the chain differential twisted by phi + phi_vol intertwines
/// with the cochain differential twisted by phi under dag.
ValidationReport verify_duality_square(const DualityContext& ctx, const PoissonStructure& ps,
                                       const Multivector& F,
                                       const std::optional<PoissonDerivation>& phi = std::nullopt);

} // namespace pbv
