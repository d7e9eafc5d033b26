#include "pbv/poisson.hpp"

#include "pbv/errors.hpp"

namespace pbv {

PoissonStructure make_poisson(const PresPtr& pres,
                              std::map<std::pair<unsigned, unsigned>, Poly> table) {
  Multivector pi(pres, 2);
  for (const auto& [ij, t] : table) {
    if (ij.first >= ij.second || ij.second >= pres->gen_count())
      throw IndexOutOfRange("bracket table index out of range or not ordered");
    pi.add(Subset{ij.first, ij.second}, t);
  }
  return PoissonStructure{pres, std::move(table), pi.canonical()};
}

Poly table_bracket(const PoissonStructure& ps, const Poly& a, const Poly& b) {
  Poly acc;
  for (const auto& [ij, t] : ps.table) {
    auto [i, j] = ij;
    acc += t * (a.derivative(i) * b.derivative(j) - a.derivative(j) * b.derivative(i));
  }
  return ps.pres->normal_form(acc);
}

ValidationReport validate_poisson(const PoissonStructure& ps) {
  ValidationReport report;
  const auto& pres = *ps.pres;
  const auto& names = pres.gen_names();
  const std::size_t r = pres.gen_count();

  auto x = [&](unsigned i) { return pres.gen_poly(i); };
  for (const auto& T : subsets_of(r, 3)) {
    unsigned i = T[0], j = T[1], k = T[2];
    Poly jac = table_bracket(ps, table_bracket(ps, x(i), x(j)), x(k)) +
               table_bracket(ps, table_bracket(ps, x(j), x(k)), x(i)) +
               table_bracket(ps, table_bracket(ps, x(k), x(i)), x(j));
    jac = pres.normal_form(jac);
    if (!jac.is_zero())
      report.fail("jacobi[" + names[i] + "," + names[j] + "," + names[k] + "]",
                  jac.to_string(names));
  }

  for (std::size_t s = 0; s < pres.rules().size(); ++s) {
    Poly rel;
    rel.add_term(pres.rules()[s].lead, 1);
    rel -= pres.rules()[s].rhs;
    for (unsigned j = 0; j < r; ++j) {
      Poly v = table_bracket(ps, rel, x(j));
      if (!v.is_zero())
        report.fail("relation_bracket[" + std::to_string(s) + "," + names[j] + "]",
                    v.to_string(names));
    }
  }

  Multivector sn = schouten(ps.pi, ps.pi);
  if (!sn.is_zero()) report.fail("schouten_square", sn.to_string());

  return report;
}

Poly bracket(const PoissonStructure& ps, const Poly& a, const Poly& b) {
  return mv_apply(ps.pi, {a, b});
}

Multivector hamiltonian(const PoissonStructure& ps, const Poly& a) {
  return mv_assemble(ps.pres, 1,
                     [&](const Subset& J) { return bracket(ps, a, ps.pres->gen_poly(J[0])); });
}

PoissonDerivation poisson_derivation(const PoissonStructure& ps, const Multivector& phi) {
  if (phi.deg != 1) throw DegreeMismatch("a Poisson derivation must have degree 1");
  Multivector d = schouten(ps.pi, phi);
  if (!d.is_zero())
    throw NotPoissonDerivation("[pi, phi] = " + d.to_string());
  return PoissonDerivation{phi.canonical()};
}

Multivector cochain_delta(const PoissonStructure& ps, const Multivector& F,
                          const std::optional<PoissonDerivation>& phi) {
  Multivector out = schouten(ps.pi, F);
  if (phi) out -= mv_wedge(phi->phi, F);
  return out;
}

KForm chain_partial(const PoissonStructure& ps, const KForm& omega,
                    const std::optional<PoissonDerivation>& phi) {
  if (omega.deg == 0) return KForm(ps.pres, 0);
  KForm out = contract_form(ps.pi, de_rham(omega));
  if (omega.deg >= 2) out -= de_rham(contract_form(ps.pi, omega));
  if (phi) out += contract_form(phi->phi, omega);
  return out;
}

} // namespace pbv
