#pragma once

#include "pbv/presentation.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace pbv {

/// Skew multiderivation of degree p, stored as sum_J comps[J] (dx_J)* over
/// sorted p-subsets J of the generators. Components are kept in normal form
/// and zero components are dropped; the stored representative is not unique,
/// use canonical()/operator== for comparisons.
struct Multivector {
  PresPtr pres;
  unsigned deg = 0;
  std::map<Subset, Poly> comps;

  Multivector() = default;
  Multivector(PresPtr pr, unsigned d) : pres(std::move(pr)), deg(d) {}

  void add(const Subset& J, const Poly& coeff);
  Poly at(const Subset& J) const;
  bool is_zero() const;

  /// Projection to the canonical representative determined by the dual
  /// basis: component at K becomes sum_J comps[J] * det E[J x K].
  Multivector canonical() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  Multivector operator-() const;
  friend Multivector operator*(const Poly& a, Multivector f);
  friend Multivector operator*(const Rational& c, Multivector f);
  friend bool operator==(const Multivector& a, const Multivector& b);

  std::string to_string() const;
};

/// Differential form of degree p, stored as sum_K comps[K] dx_K.
struct KForm {
  PresPtr pres;
  unsigned deg = 0;
  std::map<Subset, Poly> comps;

  KForm() = default;
  KForm(PresPtr pr, unsigned d) : pres(std::move(pr)), deg(d) {}

  void add(const Subset& K, const Poly& coeff);
  Poly at(const Subset& K) const;
  bool is_zero() const;

  /// Canonical representative: component at K becomes
  /// sum_J comps[J] * det E[K x J].
  KForm canonical() const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  KForm operator-() const;
  friend KForm operator*(const Poly& a, KForm f);
  friend KForm operator*(const Rational& c, KForm f);
  friend bool operator==(const KForm& a, const KForm& b);

  std::string to_string() const;
};

Multivector mv_scalar(const PresPtr& pres, const Poly& a);
KForm form_scalar(const PresPtr& pres, const Poly& a);
/// (dx_J)* with coefficient 1, resp. dx_K.
Multivector mv_unit(const PresPtr& pres, const Subset& J);
KForm form_unit(const PresPtr& pres, const Subset& K);

/// F evaluated on a tuple of ring elements:
/// F(a_1,...,a_p) = sum_J F_J det[(dx_{j_s})*(a_t)].
Poly mv_apply(const Multivector& F, const std::vector<Poly>& args);

/// F evaluated on the generator tuple x_K; equals pairing(F, dx_K).
Poly mv_eval_on_gens(const Multivector& F, const Subset& K);

/// <F, omega> = sum_J sum_K F_J omega_K det E[J x K]; degrees must agree.
Poly pairing(const Multivector& F, const KForm& omega);

/// Assembles sum_K eval(K) (dx_K)* over all sorted p-subsets K. When eval is
/// the restriction of a multiderivation to generator tuples, this is its
/// canonical representative.
Multivector mv_assemble(const PresPtr& pres, unsigned p,
                        const std::function<Poly(const Subset&)>& eval);

Multivector mv_wedge(const Multivector& F, const Multivector& G);
KForm form_wedge(const KForm& a, const KForm& b);

/// iota_F: Omega^q -> Omega^{q-p}, the shuffle-sum contraction of a form by
/// a multivector.
KForm contract_form(const Multivector& F, const KForm& omega);

/// iota_omega: X^q -> X^{q-p}, defined by
/// (iota_omega F)(a_1,...,a_{q-p}) = F(da_1 ^ ... ^ da_{q-p} ^ omega).
Multivector contract_mv(const KForm& omega, const Multivector& F);

/// de Rham differential; the result is canonicalized, which makes it
/// independent of the chosen representative.
KForm de_rham(const KForm& omega);

/// The volume form vol = sum_I a_I dx_I and its dual vol* = sum_I b_I (dx_I)*
/// from the presentation's volume data.
KForm volume_form(const PresPtr& pres);
Multivector volume_mv(const PresPtr& pres);

/// Schouten-Nijenhuis bracket X^p x X^q -> X^{p+q-1}, via its values on
/// generator tuples.
Multivector schouten(const Multivector& P, const Multivector& Q);

} // namespace pbv
