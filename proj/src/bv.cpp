#include "pbv/bv.hpp"

#include "pbv/errors.hpp"

namespace pbv {

BVOperator make_bv(DualityContext ctx, std::optional<KForm> twist) {
  if (twist) {
    if (twist->deg != 1) throw DegreeMismatch("BV twist must be a 1-form");
    KForm d = de_rham(*twist);
    if (!d.is_zero()) throw NotClosed("BV twist is not closed: d(twist) = " + d.to_string());
  }
  return BVOperator{std::move(ctx), std::move(twist)};
}

Multivector bv_delta(const BVOperator& op, const Multivector& P) {
  if (P.deg == 0) return Multivector(op.ctx.pres, 0);
  KForm w = ddag(op.ctx, P);
  KForm dw = de_rham(w);
  if (op.twist) dw -= form_wedge(*op.twist, w);
  Multivector out = flat(op.ctx, dw);
  return P.deg % 2 == 0 ? out : -out;
}

Multivector bv_delta_explicit(const PresPtr& pres, const Multivector& P) {
  const unsigned p = P.deg;
  if (p == 0) return Multivector(pres, 0);
  const int sign = p % 2 == 0 ? 1 : -1;
  return mv_assemble(pres, p - 1, [&](const Subset& K) {
    std::vector<Poly> args;
    args.reserve(p);
    for (unsigned i : K) args.push_back(pres->gen_poly(i));
    args.emplace_back();
    Poly acc;
    for (unsigned l = 0; l < pres->gen_count(); ++l) {
      args.back() = pres->gen_poly(l);
      acc += pres->dual_derivation(l, mv_apply(P, args));
    }
    for (const auto& [I, aI] : pres->volume_a()) {
      auto it = pres->volume_b().find(I);
      if (it == pres->volume_b().end()) continue;
      args.back() = aI;
      acc += mv_apply(P, args) * it->second;
    }
    return Rational(sign) * acc;
  });
}

Multivector gerstenhaber_via_bv(const BVOperator& op, const Multivector& P,
                                const Multivector& Q) {
  const unsigned n = op.ctx.pres->smooth_dim();
  const unsigned m = P.deg + Q.deg;
  // X^{m}(R) = 0 above the smooth dimension, so the product term drops out
  Multivector prod_term = m <= n ? bv_delta(op, mv_wedge(P, Q))
                                 : Multivector(op.ctx.pres, m == 0 ? 0 : m - 1);
  // Delta on a scalar is zero one degree down, so those wedge terms drop out
  Multivector out = prod_term;
  if (P.deg > 0) out -= mv_wedge(bv_delta(op, P), Q);
  Multivector mixed = Q.deg > 0 ? mv_wedge(P, bv_delta(op, Q))
                                : Multivector(op.ctx.pres, m == 0 ? 0 : m - 1);
  out = P.deg % 2 == 0 ? out - mixed : out + mixed;
  return P.deg % 2 == 0 ? out : -out;
}

Multivector bv_twisted(const BVOperator& op, const Multivector& P) {
  if (!op.twist) throw Error("bv_twisted requires a twist 1-form");
  KForm d = de_rham(*op.twist);
  if (!d.is_zero()) throw NotClosed("BV twist is not closed: d(twist) = " + d.to_string());
  BVOperator untwisted{op.ctx, std::nullopt};
  Multivector out = bv_delta(untwisted, P);
  Multivector corr = contract_mv(*op.twist, P);
  return P.deg % 2 == 0 ? out - corr : out + corr;
}

} // namespace pbv
