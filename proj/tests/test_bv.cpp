#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "pbv/bv.hpp"
#include "pbv/errors.hpp"
#include "pbv/modular.hpp"
#include "random.hpp"

using namespace pbv;
using fixtures::p;

namespace {

// free-polynomial closed form for decomposable inputs:
// Delta(a d_{i1}^..^d_{ip}) = sum_j (-1)^j da/dx_{ij} d_{i1}^..(hat j)..^d_{ip}
Multivector free_decomposable_oracle(const PresPtr& R, const Poly& a, const Subset& I) {
  Multivector out(R, static_cast<unsigned>(I.size()) - 1);
  for (std::size_t j = 0; j < I.size(); ++j) {
    Subset rest;
    for (std::size_t t = 0; t < I.size(); ++t)
      if (t != j) rest.push_back(I[t]);
    out.add(rest, Rational((j + 1) % 2 == 0 ? 1 : -1) * a.derivative(I[j]));
  }
  return out;
}

} // namespace

TEST_CASE("BV operator on the free plane") {
  auto R = fixtures::plane();
  auto op = make_bv(make_duality(R));
  Multivector P = p(R, "x^2*y") * mv_unit(R, Subset{0, 1});
  Multivector expect(R, 1);
  expect.add(Subset{0}, p(R, "x^2"));
  expect.add(Subset{1}, p(R, "-2*x*y"));
  CHECK(bv_delta(op, P) == expect);
  CHECK(bv_delta(op, P) == free_decomposable_oracle(R, p(R, "x^2*y"), Subset{0, 1}));
  CHECK(bv_delta(op, mv_scalar(R, p(R, "x^3"))).is_zero());
}

TEST_CASE("both routes agree everywhere") {
  testing::Rng rng(131);
  for (auto R : {fixtures::plane(), fixtures::space(), fixtures::sphere()}) {
    auto op = make_bv(make_duality(R));
    for (unsigned d = 1; d <= R->smooth_dim(); ++d) {
      auto P = rng.mv(R, d);
      CHECK(bv_delta(op, P) == bv_delta_explicit(R, P));
    }
  }
}

TEST_CASE("BV operator squares to zero") {
  testing::Rng rng(137);
  for (auto R : {fixtures::plane(), fixtures::space(), fixtures::sphere()}) {
    auto op = make_bv(make_duality(R));
    for (unsigned d = 2; d <= R->smooth_dim(); ++d) {
      auto P = rng.mv(R, d);
      CHECK(bv_delta(op, bv_delta(op, P)).is_zero());
    }
  }
}

TEST_CASE("BV operator recovers the modular derivation") {
  for (const auto& ps : {fixtures::symplectic_plane(), fixtures::quadratic_plane(),
                         fixtures::so3(fixtures::sphere())}) {
    auto op = make_bv(make_duality(ps.pres));
    CHECK(bv_delta(op, ps.pi) == modular_derivation(ps).phi);
    CHECK(bv_delta_explicit(ps.pres, ps.pi) == modular_derivation(ps).phi);
  }
  // Delta(H_a) = -phi_vol(a)
  auto qp = fixtures::quadratic_plane();
  auto op = make_bv(make_duality(qp.pres));
  Poly a = p(qp.pres, "x");
  CHECK(bv_delta(op, hamiltonian(qp, a)) ==
        mv_scalar(qp.pres, -mv_apply(modular_derivation(qp).phi, {a})));
}

TEST_CASE("the generated bracket is the Schouten bracket") {
  testing::Rng rng(139);
  for (auto R : {fixtures::plane(), fixtures::space(), fixtures::sphere()}) {
    auto op = make_bv(make_duality(R));
    const unsigned n = R->smooth_dim();
    for (unsigned a = 0; a <= 2 && a <= n; ++a)
      for (unsigned b = 1; a + b <= n + 1 && b <= n; ++b) {
        auto P = rng.mv(R, a, 1);
        auto Q = rng.mv(R, b, 1);
        CHECK(gerstenhaber_via_bv(op, P, Q) == schouten(P, Q));
      }
  }
  for (const auto& ps : {fixtures::symplectic_plane(), fixtures::so3(fixtures::space())}) {
    auto op = make_bv(make_duality(ps.pres));
    CHECK(gerstenhaber_via_bv(op, ps.pi, ps.pi).is_zero());
  }
}

TEST_CASE("contraction identities for the BV operator") {
  testing::Rng rng(149);
  for (auto R : {fixtures::plane(), fixtures::space(), fixtures::sphere()}) {
    auto op = make_bv(make_duality(R));
    const unsigned n = R->smooth_dim();
    // iota_w(Delta P) = Delta(iota_w P) + iota_{dw}(P), w of degree p-1...
    // applied with w a (p-1)-form so both sides are scalars
    for (unsigned d = 1; d <= n; ++d) {
      auto P = rng.mv(R, d, 1);
      auto w = rng.form(R, d - 1, 1);
      Poly lhs = pairing(mv_scalar(R, R->constant(1)),
                         form_scalar(R, R->constant(0))); // 0
      auto left = contract_mv(w, bv_delta(op, P));
      auto right = bv_delta(op, contract_mv(w, P)) + contract_mv(de_rham(w), P);
      CHECK(left == right);
      (void)lhs;
    }
    // iota_w(P^Q) = (-1)^{(p-1)q} iota_{iota_Q w}(P) + (-1)^p iota_{iota_P w}(Q)
    auto P = rng.mv(R, 1, 1);
    auto Q = rng.mv(R, 1, 1);
    auto w = rng.form(R, 1, 1);
    auto lhs2 = contract_mv(w, mv_wedge(P, Q));
    auto rhs2 = contract_mv(contract_form(Q, w), P) - contract_mv(contract_form(P, w), Q);
    CHECK(lhs2 == rhs2);
  }
}

TEST_CASE("bracket-contraction compatibility") {
  // iota_{[P,Q]} w = (-1)^{(p-1)(q-1)} iota_P d iota_Q w - iota_Q d iota_P w
  //                + (-1)^p iota_{P^Q} dw
  testing::Rng rng(151);
  for (auto R : {fixtures::space(), fixtures::sphere()}) {
    auto P = rng.mv(R, 1, 1);
    auto Q = rng.mv(R, 2, 1);
    auto w = rng.form(R, 2, 1);
    auto lhs = contract_form(schouten(P, Q), w);
    auto rhs = contract_form(P, de_rham(contract_form(Q, w))) -
               contract_form(Q, de_rham(contract_form(P, w))) -
               contract_form(mv_wedge(P, Q), de_rham(w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cochain homotopy to the modular bracket") {
  // (Delta delta + delta Delta)(P) = [Delta(pi), P]
  testing::Rng rng(157);
  for (const auto& ps : {fixtures::symplectic_plane(), fixtures::quadratic_plane(),
                         fixtures::so3(fixtures::sphere())}) {
    auto op = make_bv(make_duality(ps.pres));
    auto phi = modular_derivation(ps).phi;
    const unsigned n = ps.pres->smooth_dim();
    for (unsigned d = 1; d < n; ++d) {
      auto P = rng.mv(ps.pres, d, 1);
      auto lhs = bv_delta(op, cochain_delta(ps, P)) + cochain_delta(ps, bv_delta(op, P));
      CHECK(lhs == schouten(phi, P));
    }
  }
}

TEST_CASE("twisted BV operator") {
  auto R = fixtures::plane();
  auto ctx = make_duality(R);
  KForm dx = form_unit(R, Subset{0});
  auto op = make_bv(ctx, dx);
  CHECK(bv_twisted(op, mv_unit(R, Subset{0})) == mv_scalar(R, p(R, "1")));

  // both descriptions of the twisted operator coincide
  testing::Rng rng(163);
  testing::Rng rng2(167);
  for (auto P0 : {rng.mv(R, 1, 2), rng.mv(R, 2, 2)}) {
    KForm w = de_rham(form_scalar(R, rng2.poly(R, 2)));
    auto opt = make_bv(ctx, w);
    CHECK(bv_twisted(opt, P0) == bv_delta(opt, P0));
    CHECK(bv_twisted(opt, bv_twisted(opt, P0)).is_zero());
  }

  KForm ydx = p(R, "y") * form_unit(R, Subset{0});
  CHECK_THROWS_AS(make_bv(ctx, ydx), NotClosed);
  BVOperator raw{ctx, ydx};
  CHECK_THROWS_AS(bv_twisted(raw, mv_unit(R, Subset{0})), NotClosed);
}

TEST_CASE("twisted chain-side identities for pseudo-unimodular data") {
  // with w closed and phi = iota_w(pi): partial_t = [iota_pi, d_t] and
  // partial_t d_t + d_t partial_t = 0
  testing::Rng rng(173);
  for (const auto& ps : {fixtures::symplectic_plane(), fixtures::so3(fixtures::space())}) {
    auto R = ps.pres;
    KForm w = de_rham(form_scalar(R, rng.poly(R, 2)));
    auto phi = poisson_derivation(ps, contract_mv(w, ps.pi));
    auto d_t = [&](const KForm& f) { return de_rham(f) - form_wedge(w, f); };
    for (unsigned d = 1; d < R->smooth_dim(); ++d) {
      auto f = rng.form(R, d, 1);
      auto lhs = chain_partial(ps, f, phi);
      auto rhs = contract_form(ps.pi, d_t(f));
      if (d >= 2) rhs -= d_t(contract_form(ps.pi, f));
      CHECK(lhs == rhs);
      CHECK((chain_partial(ps, d_t(f), phi) + d_t(chain_partial(ps, f, phi))).is_zero());
    }
  }
}
