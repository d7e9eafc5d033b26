#include "pbv/duality.hpp"

#include "pbv/errors.hpp"
#include "pbv/modular.hpp"

namespace pbv {

DualityContext make_duality(const PresPtr& pres) {
  return DualityContext{pres, volume_form(pres), volume_mv(pres)};
}

namespace {

void check_degree(unsigned deg, unsigned n, const char* what) {
  if (deg > n) throw DegreeOutOfRange(std::string(what) + ": degree exceeds the smooth dimension");
}

int dag_sign(unsigned p) { return (p * (p + 1) / 2) % 2 == 0 ? 1 : -1; }

} // namespace

KForm ddag(const DualityContext& ctx, const Multivector& F) {
  check_degree(F.deg, ctx.pres->smooth_dim(), "ddag");
  return contract_form(F, ctx.vol);
}

Multivector flat(const DualityContext& ctx, const KForm& omega) {
  check_degree(omega.deg, ctx.pres->smooth_dim(), "flat");
  return contract_mv(omega, ctx.vol_star);
}

KForm dag(const DualityContext& ctx, const Multivector& F) {
  return Rational(dag_sign(F.deg)) * ddag(ctx, F);
}

ValidationReport verify_duality_square(const DualityContext& ctx, const PoissonStructure& ps,
                                       const Multivector& F,
                                       const std::optional<PoissonDerivation>& phi) {
  ValidationReport report;
  Multivector chain_twist_mv = modular_derivation(ps).phi;
  if (phi) chain_twist_mv += phi->phi;
  auto chain_twist = poisson_derivation(ps, chain_twist_mv);

  KForm down_then_right = chain_partial(ps, dag(ctx, F), chain_twist);
  KForm right_then_down = dag(ctx, cochain_delta(ps, F, phi));
  KForm residue = down_then_right - right_then_down;
  if (!residue.is_zero()) report.fail("duality_square", residue.to_string());
  return report;
}

} // namespace pbv
