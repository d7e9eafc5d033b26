#pragma once

#include "pbv/duality.hpp"

namespace pbv {

/// BV operator transported from the (possibly twisted) de Rham differential
/// through the signed duality. The optional twist is a closed 1-form.
struct BVOperator {
  DualityContext ctx;
  std::optional<KForm> twist;
};

/// Throws NotClosed when a supplied twist is not a de Rham cocycle.
BVOperator make_bv(DualityContext ctx, std::optional<KForm> twist = std::nullopt);

/// Delta(P) = (-1)^p flat(d_t(ddag(P))) with d_t = d - twist ^ -.
Multivector bv_delta(const BVOperator& op, const Multivector& P);

/// The closed dual-basis formula for the untwisted operator:
/// Delta(P)(a_1..a_{p-1}) = (-1)^p [ sum_l (dx_l)*(P(a_1..a_{p-1}, x_l))
///                                 + sum_I P(a_1..a_{p-1}, a_I) b_I ].
Multivector bv_delta_explicit(const PresPtr& pres, const Multivector& P);

/// The bracket generated by Delta:
/// (-1)^p (Delta(P^Q) - Delta(P)^Q - (-1)^p P^Delta(Q)).
Multivector gerstenhaber_via_bv(const BVOperator& op, const Multivector& P, const Multivector& Q);

/// Delta_t(P) = Delta(P) - (-1)^p iota_twist(P), the operator transported
/// from d_t written against the untwisted Delta.
Multivector bv_twisted(const BVOperator& op, const Multivector& P);

} // namespace pbv
