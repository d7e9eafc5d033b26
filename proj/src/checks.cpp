#include "pbv/checks.hpp"

#include "pbv/bv.hpp"
#include "pbv/errors.hpp"
#include "pbv/modular.hpp"

#include <random>
#include <stdexcept>

namespace pbv {

namespace {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }

  Poly poly(const PresPtr& pres, int max_deg) {
    const std::size_t r = pres->gen_count();
    Poly out;
    int terms = integer(1, 3);
    for (int t = 0; t < terms; ++t) {
      Monomial m = Monomial::one(r);
      int deg = integer(0, max_deg);
      for (int d = 0; d < deg; ++d)
        m = m.times(Monomial::generator(r, static_cast<std::size_t>(integer(0, int(r) - 1))));
      out.add_term(m, Rational(integer(-3, 3)));
    }
    return pres->normal_form(out);
  }

  Multivector mv(const PresPtr& pres, unsigned p, int max_deg) {
    Multivector out(pres, p);
    for (const auto& J : subsets_of(pres->gen_count(), p))
      if (integer(0, 2) != 0) out.add(J, poly(pres, max_deg));
    return out;
  }

  KForm form(const PresPtr& pres, unsigned p, int max_deg) {
    KForm out(pres, p);
    for (const auto& K : subsets_of(pres->gen_count(), p))
      if (integer(0, 2) != 0) out.add(K, poly(pres, max_deg));
    return out;
  }
};

std::string sample_tag(unsigned i) { return "sample " + std::to_string(i); }

/// {m, a} + m phi(a), the bracket of the twisted module R_phi.
Poly module_bracket(const PoissonStructure& ps, const Poly& m, const Poly& a,
                    const std::optional<Multivector>& phi) {
  Poly out = bracket(ps, m, a);
  if (phi) out += m * mv_apply(*phi, {a});
  return ps.pres->normal_form(out);
}

/// The cochain differential evaluated term by term from its defining
/// formula, independent of the bracket-based implementation.
Multivector cochain_delta_direct(const PoissonStructure& ps, const Multivector& F,
                                 const std::optional<Multivector>& phi) {
  const auto& pres = ps.pres;
  const unsigned p = F.deg;
  return mv_assemble(pres, p + 1, [&](const Subset& K) {
    Poly acc;
    for (unsigned i = 0; i < p + 1; ++i) {
      std::vector<Poly> rest;
      for (unsigned t = 0; t < p + 1; ++t)
        if (t != i) rest.push_back(pres->gen_poly(K[t]));
      Poly v = module_bracket(ps, mv_apply(F, rest), pres->gen_poly(K[i]), phi);
      acc += (i % 2 == 0) ? -v : v;
    }
    for (unsigned i = 0; i < p + 1; ++i)
      for (unsigned j = i + 1; j < p + 1; ++j) {
        std::vector<Poly> args{bracket(ps, pres->gen_poly(K[i]), pres->gen_poly(K[j]))};
        for (unsigned t = 0; t < p + 1; ++t)
          if (t != i && t != j) args.push_back(pres->gen_poly(K[t]));
        Poly v = mv_apply(F, args);
        acc += ((i + j) % 2 == 0) ? v : -v;
      }
    return acc;
  });
}

/// The chain differential evaluated term by term on each stored component.
KForm chain_partial_direct(const PoissonStructure& ps, const KForm& omega,
                           const std::optional<Multivector>& phi) {
  const auto& pres = ps.pres;
  const unsigned p = omega.deg;
  if (p == 0) return KForm(pres, 0);
  KForm out(pres, p - 1);
  for (const auto& [K, m] : omega.comps) {
    for (unsigned i = 0; i < p; ++i) {
      Subset rest;
      for (unsigned t = 0; t < p; ++t)
        if (t != i) rest.push_back(K[t]);
      Poly v = module_bracket(ps, m, pres->gen_poly(K[i]), phi);
      out.add(rest, (i % 2 == 0) ? v : -v);
    }
    for (unsigned i = 0; i < p; ++i)
      for (unsigned j = i + 1; j < p; ++j) {
        Subset rest;
        for (unsigned t = 0; t < p; ++t)
          if (t != i && t != j) rest.push_back(K[t]);
        KForm db = Rational(((i + j) % 2 == 0) ? 1 : -1) *
                   (m * de_rham(form_scalar(
                            pres, bracket(ps, pres->gen_poly(K[i]), pres->gen_poly(K[j])))));
        out += form_wedge(db, form_unit(pres, rest));
      }
  }
  return out.canonical();
}

/// Closed-form value of the BV operator on a decomposable input over a free
/// polynomial ring: Delta(a d_{i1}^..^d_{ip}) with alternating partials.
Multivector free_decomposable_value(const PresPtr& R, const Poly& a, const Subset& I) {
  Multivector out(R, static_cast<unsigned>(I.size()) - 1);
  for (std::size_t j = 0; j < I.size(); ++j) {
    Subset rest;
    for (std::size_t t = 0; t < I.size(); ++t)
      if (t != j) rest.push_back(I[t]);
    out.add(rest, Rational((j + 1) % 2 == 0 ? 1 : -1) * a.derivative(I[j]));
  }
  return out;
}

void suite_exterior(const PoissonStructure& ps, const CheckOptions& opts,
                    ValidationReport& rep) {
  Rng rng(opts.seed);
  const auto& R = ps.pres;
  const unsigned n = R->smooth_dim();
  const std::size_t r = R->gen_count();
  const KForm vol = volume_form(R);
  for (unsigned i = 0; i < opts.samples; ++i) {
    // d(d omega) = 0
    auto w0 = rng.form(R, static_cast<unsigned>(rng.integer(0, int(n) - 1)), opts.max_degree);
    if (!de_rham(de_rham(w0)).is_zero())
      rep.fail("exterior/d_squared", sample_tag(i) + ": omega = " + w0.to_string());

    // iota_F iota_G = (-1)^{p1 p2} iota_G iota_F
    if (n >= 2) {
      unsigned p1 = 1;
      unsigned p2 = static_cast<unsigned>(rng.integer(1, n >= 3 ? 2 : 1));
      auto F = rng.mv(R, p1, opts.max_degree);
      auto G = rng.mv(R, p2, opts.max_degree);
      auto t = rng.form(R, static_cast<unsigned>(rng.integer(int(p1 + p2), int(n))),
                        opts.max_degree);
      auto lhs = contract_form(F, contract_form(G, t));
      auto rhs = contract_form(G, contract_form(F, t));
      if ((p1 * p2) % 2 == 1) rhs = -rhs;
      if (!(lhs == rhs))
        rep.fail("exterior/contractions_commute",
                 sample_tag(i) + ": F = " + F.to_string() + ", G = " + G.to_string());
    }

    // iota_F(w ^ da) = iota_F(w) ^ da + (-1)^{q-p+1} iota_{iota_da F}(w)
    if (n >= 2) {
      unsigned pd = static_cast<unsigned>(rng.integer(1, std::min(2u, n)));
      unsigned qd = static_cast<unsigned>(rng.integer(int(pd), int(n) - 1));
      auto F = rng.mv(R, pd, opts.max_degree);
      auto w = rng.form(R, qd, opts.max_degree);
      KForm da = de_rham(form_scalar(R, rng.poly(R, opts.max_degree)));
      auto lhs = contract_form(F, form_wedge(w, da));
      auto corr = contract_form(contract_mv(da, F), w);
      auto rhs = form_wedge(contract_form(F, w), da) +
                 ((qd - pd + 1) % 2 == 0 ? corr : -corr);
      if (!(lhs == rhs))
        rep.fail("exterior/contraction_leibniz",
                 sample_tag(i) + ": F = " + F.to_string() + ", omega = " + w.to_string());
    }

    // F(a) eta = da ^ iota_F(eta) and iota_{H_a}(eta) = -da ^ iota_pi(eta)
    {
      Poly c = rng.poly(R, opts.max_degree);
      KForm eta = c * vol;
      Poly a = rng.poly(R, opts.max_degree);
      KForm da = de_rham(form_scalar(R, a));
      auto F = rng.mv(R, 1, opts.max_degree);
      if (!(mv_apply(F, {a}) * eta == form_wedge(da, contract_form(F, eta))))
        rep.fail("exterior/top_form_contraction",
                 sample_tag(i) + ": F = " + F.to_string() + ", a = " +
                     a.to_string(R->gen_names()));
      auto lhs = contract_form(hamiltonian(ps, a), eta);
      auto rhs = -form_wedge(da, contract_form(ps.pi, eta));
      if (!(lhs == rhs))
        rep.fail("exterior/hamiltonian_contraction",
                 sample_tag(i) + ": a = " + a.to_string(R->gen_names()));
    }

    // <F, w> = sum_{|L| = n-p} <F ^ (dx_L)*, w ^ dx_L>
    {
      unsigned pd = static_cast<unsigned>(rng.integer(0, int(n)));
      auto F = rng.mv(R, pd, opts.max_degree);
      auto w = rng.form(R, pd, opts.max_degree);
      Poly sum;
      for (const auto& L : subsets_of(r, n - pd))
        sum += pairing(mv_wedge(F, mv_unit(R, L)), form_wedge(w, form_unit(R, L)));
      if (!(R->normal_form(sum) == pairing(F, w)))
        rep.fail("exterior/pairing_expansion",
                 sample_tag(i) + ": F = " + F.to_string() + ", omega = " + w.to_string());
    }
  }
}

void suite_differentials(const PoissonStructure& ps, const CheckOptions& opts,
                         ValidationReport& rep) {
  Rng rng(opts.seed + 1);
  const auto& R = ps.pres;
  const unsigned n = R->smooth_dim();
  auto phi_vol = poisson_derivation(ps, modular_derivation(ps).phi);
  for (unsigned i = 0; i < opts.samples; ++i) {
    auto phi_h = poisson_derivation(ps, hamiltonian(ps, rng.poly(R, opts.max_degree)));
    const std::optional<PoissonDerivation> twists[] = {std::nullopt, phi_h, phi_vol};
    unsigned pd = static_cast<unsigned>(rng.integer(0, int(n) - 1));
    auto F = rng.mv(R, pd, 1);
    auto w = rng.form(R, static_cast<unsigned>(rng.integer(1, int(n))), 1);
    for (const auto& tw : twists) {
      std::optional<Multivector> raw = tw ? std::optional<Multivector>(tw->phi) : std::nullopt;
      if (!(cochain_delta(ps, F, tw) == cochain_delta_direct(ps, F, raw)))
        rep.fail("differentials/cochain_direct_formula",
                 sample_tag(i) + ": F = " + F.to_string());
      if (!(chain_partial(ps, w, tw) == chain_partial_direct(ps, w, raw)))
        rep.fail("differentials/chain_direct_formula",
                 sample_tag(i) + ": omega = " + w.to_string());
      if (!cochain_delta(ps, cochain_delta(ps, F, tw), tw).is_zero())
        rep.fail("differentials/delta_squared", sample_tag(i) + ": F = " + F.to_string());
      if (!chain_partial(ps, chain_partial(ps, w, tw), tw).is_zero())
        rep.fail("differentials/partial_squared",
                 sample_tag(i) + ": omega = " + w.to_string());
    }

    // iota_F partial - (-1)^p partial iota_F = iota_{delta F}
    if (n >= 2) {
      unsigned qd = static_cast<unsigned>(rng.integer(1, int(n) - 1));
      auto G = rng.mv(R, qd, 1);
      auto v = rng.form(R, qd + 1, 1);
      auto lhs = contract_form(G, chain_partial(ps, v));
      auto mixed = chain_partial(ps, contract_form(G, v));
      lhs = qd % 2 == 0 ? lhs - mixed : lhs + mixed;
      if (!(lhs == contract_form(cochain_delta(ps, G), v)))
        rep.fail("differentials/contraction_intertwines",
                 sample_tag(i) + ": F = " + G.to_string() + ", omega = " + v.to_string());
    }

    // delta(F ^ G) = delta(F) ^ G + (-1)^{deg F} F ^ delta(G)
    if (n >= 2) {
      auto A = rng.mv(R, 1, 1);
      auto B = rng.mv(R, static_cast<unsigned>(rng.integer(1, int(n) - 1)), 1);
      auto rhs = mv_wedge(cochain_delta(ps, A), B) - mv_wedge(A, cochain_delta(ps, B));
      if (!(cochain_delta(ps, mv_wedge(A, B)) == rhs))
        rep.fail("differentials/wedge_derivation",
                 sample_tag(i) + ": F = " + A.to_string() + ", G = " + B.to_string());
    }

    // partial d + d partial = 0
    {
      auto v = rng.form(R, static_cast<unsigned>(rng.integer(1, std::max(1, int(n) - 1))), 1);
      if (!(de_rham(chain_partial(ps, v)) + chain_partial(ps, de_rham(v))).is_zero())
        rep.fail("differentials/de_rham_anticommutes",
                 sample_tag(i) + ": omega = " + v.to_string());
    }
  }
}

void suite_duality(const PoissonStructure& ps, const CheckOptions& opts,
                   ValidationReport& rep) {
  Rng rng(opts.seed + 2);
  const auto& R = ps.pres;
  const unsigned n = R->smooth_dim();
  auto ctx = make_duality(R);
  for (unsigned i = 0; i < opts.samples; ++i) {
    for (unsigned d = 0; d <= n; ++d) {
      auto F = rng.mv(R, d, opts.max_degree);
      if (!(flat(ctx, ddag(ctx, F)) == F))
        rep.fail("duality/round_trip_mv", sample_tag(i) + ": F = " + F.to_string());
      auto w = rng.form(R, d, opts.max_degree);
      if (!(ddag(ctx, flat(ctx, w)) == w))
        rep.fail("duality/round_trip_form", sample_tag(i) + ": omega = " + w.to_string());
    }
    unsigned d = static_cast<unsigned>(rng.integer(0, int(n) - 1));
    auto F = rng.mv(R, d, 1);
    auto square = verify_duality_square(ctx, ps, F);
    if (!square.passed)
      rep.fail("duality/twisted_square",
               sample_tag(i) + ": " + square.failures.front().second);
    auto phi = poisson_derivation(ps, hamiltonian(ps, rng.poly(R, 1)));
    auto square2 = verify_duality_square(ctx, ps, F, phi);
    if (!square2.passed)
      rep.fail("duality/twisted_square_extra",
               sample_tag(i) + ": " + square2.failures.front().second);
  }
}

void suite_bv(const PoissonStructure& ps, const CheckOptions& opts, ValidationReport& rep) {
  Rng rng(opts.seed + 3);
  const auto& R = ps.pres;
  const unsigned n = R->smooth_dim();
  const std::size_t r = R->gen_count();
  auto ctx = make_duality(R);
  auto op = make_bv(ctx);
  auto phi = modular_derivation(ps).phi;

  if (!(bv_delta(op, ps.pi) == phi) || !(bv_delta_explicit(R, ps.pi) == phi))
    rep.fail("bv/modular_image", "Delta(pi) != phi_vol");

  for (unsigned i = 0; i < opts.samples; ++i) {
    unsigned d = static_cast<unsigned>(rng.integer(1, int(n)));
    auto P = rng.mv(R, d, opts.max_degree);
    if (!(bv_delta(op, P) == bv_delta_explicit(R, P)))
      rep.fail("bv/routes_agree", sample_tag(i) + ": P = " + P.to_string());
    if (d >= 2 && !bv_delta(op, bv_delta(op, P)).is_zero())
      rep.fail("bv/delta_squared", sample_tag(i) + ": P = " + P.to_string());

    // Delta(H_a) = -phi_vol(a)
    Poly a = rng.poly(R, opts.max_degree);
    if (!(bv_delta(op, hamiltonian(ps, a)) == mv_scalar(R, -mv_apply(phi, {a}))))
      rep.fail("bv/hamiltonian_image",
               sample_tag(i) + ": a = " + a.to_string(R->gen_names()));

    // the deviation from being a derivation is the Schouten bracket
    {
      unsigned pa = static_cast<unsigned>(rng.integer(0, std::min(2, int(n))));
      unsigned pb = static_cast<unsigned>(
          rng.integer(1, std::min(int(n), int(n) + 1 - int(pa))));
      auto A = rng.mv(R, pa, 1);
      auto B = rng.mv(R, pb, 1);
      if (!(gerstenhaber_via_bv(op, A, B) == schouten(A, B)))
        rep.fail("bv/generates_schouten",
                 sample_tag(i) + ": P = " + A.to_string() + ", Q = " + B.to_string());
    }

    // (Delta delta + delta Delta)(P) = [phi_vol, P]
    if (n >= 2) {
      unsigned dh = static_cast<unsigned>(rng.integer(1, int(n) - 1));
      auto Q = rng.mv(R, dh, 1);
      auto lhs = bv_delta(op, cochain_delta(ps, Q)) + cochain_delta(ps, bv_delta(op, Q));
      if (!(lhs == schouten(phi, Q)))
        rep.fail("bv/cochain_homotopy", sample_tag(i) + ": P = " + Q.to_string());
    }

    // iota_w(Delta P) = Delta(iota_w P) + iota_{dw}(P)
    {
      auto w = rng.form(R, d - 1, 1);
      auto lhs = contract_mv(w, bv_delta(op, P));
      auto rhs = bv_delta(op, contract_mv(w, P)) + contract_mv(de_rham(w), P);
      if (!(lhs == rhs))
        rep.fail("bv/contraction_commutator",
                 sample_tag(i) + ": P = " + P.to_string() + ", omega = " + w.to_string());
    }

    // iota_w(P ^ Q) = -iota_{iota_P w}(Q) + iota_{iota_Q w}(P) for vectors
    if (n >= 2) {
      auto A = rng.mv(R, 1, 1);
      auto B = rng.mv(R, 1, 1);
      auto w = rng.form(R, 1, 1);
      auto lhs = contract_mv(w, mv_wedge(A, B));
      auto rhs = contract_mv(contract_form(B, w), A) - contract_mv(contract_form(A, w), B);
      if (!(lhs == rhs))
        rep.fail("bv/wedge_contraction",
                 sample_tag(i) + ": P = " + A.to_string() + ", Q = " + B.to_string());
    }

    // iota_{[P,Q]} w = iota_P d iota_Q w - iota_Q d iota_P w - iota_{P^Q} dw
    if (n >= 2) {
      auto A = rng.mv(R, 1, 1);
      auto B = rng.mv(R, 2, 1);
      auto w = rng.form(R, 2, 1);
      auto lhs = contract_form(schouten(A, B), w);
      auto rhs = contract_form(A, de_rham(contract_form(B, w))) -
                 contract_form(B, de_rham(contract_form(A, w))) -
                 contract_form(mv_wedge(A, B), de_rham(w));
      if (!(lhs == rhs))
        rep.fail("bv/bracket_contraction",
                 sample_tag(i) + ": P = " + A.to_string() + ", Q = " + B.to_string());
    }
  }

  // closed form on decomposable monomial inputs over a free ring
  if (R->rules().empty()) {
    for (unsigned i = 0; i < std::min(opts.samples, 20u); ++i) {
      Poly a;
      Monomial m = Monomial::one(r);
      int deg = rng.integer(0, opts.max_degree);
      for (int t = 0; t < deg; ++t)
        m = m.times(Monomial::generator(r, static_cast<std::size_t>(rng.integer(0, int(r) - 1))));
      a.add_term(m, Rational(rng.integer(1, 3)));
      auto all = subsets_of(r, static_cast<unsigned>(rng.integer(1, int(r))));
      const Subset& I = all[static_cast<std::size_t>(rng.integer(0, int(all.size()) - 1))];
      Multivector P = a * mv_unit(R, I);
      if (!(bv_delta(op, P) == free_decomposable_value(R, a, I)))
        rep.fail("bv/monomial_closed_form", sample_tag(i) + ": P = " + P.to_string());
    }
  }
}

void suite_twisted(const PoissonStructure& ps, const CheckOptions& opts,
                   ValidationReport& rep) {
  Rng rng(opts.seed + 4);
  const auto& R = ps.pres;
  const unsigned n = R->smooth_dim();
  const std::size_t r = R->gen_count();
  auto ctx = make_duality(R);

  // a non-closed twist must be rejected
  if (n >= 2) {
    KForm bad = Poly::generator(r, 0) * form_unit(R, Subset{1});
    bool rejected = false;
    try {
      make_bv(ctx, bad);
    } catch (const NotClosed&) {
      rejected = true;
    }
    if (!rejected) rep.fail("twisted/rejects_non_closed", "omega = " + bad.to_string());
  }

  for (unsigned i = 0; i < opts.samples; ++i) {
    // a closed 1-form: an exact part plus constant coefficients
    KForm w = de_rham(form_scalar(R, rng.poly(R, opts.max_degree)));
    for (unsigned s = 0; s < r; ++s) {
      KForm c(R, 1);
      c.add(Subset{s}, R->constant(rng.integer(-2, 2)));
      w += c.canonical();
    }
    auto d_t = [&](const KForm& f) { return de_rham(f) - form_wedge(w, f); };

    {
      auto f = rng.form(R, static_cast<unsigned>(rng.integer(0, int(n) - 1)), 1);
      if (!d_t(d_t(f)).is_zero())
        rep.fail("twisted/d_squared",
                 sample_tag(i) + ": omega = " + w.to_string() + ", f = " + f.to_string());
    }

    auto phi = poisson_derivation(ps, contract_mv(w, ps.pi));
    for (unsigned d = 1; d < n; ++d) {
      auto f = rng.form(R, d, 1);
      auto lhs = chain_partial(ps, f, phi);
      auto rhs = contract_form(ps.pi, d_t(f));
      if (d >= 2) rhs -= d_t(contract_form(ps.pi, f));
      if (!(lhs == rhs))
        rep.fail("twisted/partial_commutator",
                 sample_tag(i) + ": omega = " + w.to_string() + ", f = " + f.to_string());
      if (!(chain_partial(ps, d_t(f), phi) + d_t(chain_partial(ps, f, phi))).is_zero())
        rep.fail("twisted/partial_d_anticommute",
                 sample_tag(i) + ": omega = " + w.to_string() + ", f = " + f.to_string());
    }

    auto op = make_bv(ctx, w);
    if (n >= 2) {
      auto P = rng.mv(R, static_cast<unsigned>(rng.integer(2, int(n))), 1);
      if (!bv_twisted(op, bv_twisted(op, P)).is_zero())
        rep.fail("twisted/bv_squared", sample_tag(i) + ": P = " + P.to_string());
      if (!(bv_twisted(op, P) == bv_delta(op, P)))
        rep.fail("twisted/bv_routes_agree", sample_tag(i) + ": P = " + P.to_string());
    }

    // the twisted operator generates the same bracket
    {
      auto delta_t = [&](const Multivector& P) { return bv_twisted(op, P); };
      unsigned pa = static_cast<unsigned>(rng.integer(0, std::min(2, int(n))));
      unsigned pb = static_cast<unsigned>(
          rng.integer(1, std::min(int(n), int(n) + 1 - int(pa))));
      auto A = rng.mv(R, pa, 1);
      auto B = rng.mv(R, pb, 1);
      unsigned m = pa + pb;
      Multivector prod = m <= n ? delta_t(mv_wedge(A, B))
                                : Multivector(R, m == 0 ? 0 : m - 1);
      Multivector out = prod;
      if (pa > 0) out -= mv_wedge(delta_t(A), B);
      Multivector mixed =
          pb > 0 ? mv_wedge(A, delta_t(B)) : Multivector(R, m == 0 ? 0 : m - 1);
      out = pa % 2 == 0 ? out - mixed : out + mixed;
      if (pa % 2 == 1) out = -out;
      if (!(out == schouten(A, B)))
        rep.fail("twisted/generates_schouten",
                 sample_tag(i) + ": P = " + A.to_string() + ", Q = " + B.to_string());
    }
  }
}

} // namespace

std::vector<std::string> identity_suites() {
  return {"exterior", "differentials", "duality", "bv", "twisted"};
}

ValidationReport run_identity_suite(const PoissonStructure& ps, const std::string& suite,
                                    const CheckOptions& opts) {
  ValidationReport rep;
  if (suite == "all") {
    for (const auto& name : identity_suites()) {
      auto part = run_identity_suite(ps, name, opts);
      for (auto& f : part.failures) rep.fail(f.first, f.second);
    }
    return rep;
  }
  if (suite == "exterior")
    suite_exterior(ps, opts, rep);
  else if (suite == "differentials")
    suite_differentials(ps, opts, rep);
  else if (suite == "duality")
    suite_duality(ps, opts, rep);
  else if (suite == "bv")
    suite_bv(ps, opts, rep);
  else if (suite == "twisted")
    suite_twisted(ps, opts, rep);
  else
    throw std::invalid_argument("unknown identity suite: " + suite);
  return rep;
}

} // namespace pbv
