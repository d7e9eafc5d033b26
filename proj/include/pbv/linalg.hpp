#pragma once

#include "pbv/rational.hpp"

#include <optional>
#include <vector>

namespace pbv {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Rank by fraction-free-ish Gaussian elimination over QQ (exact).
std::size_t rank(RatMat m);

/// Solves A x = b exactly. Columns are eliminated left to right with the
/// first available nonzero pivot row, and free variables are set to zero,
/// so the result is deterministic. Returns nothing when inconsistent.
std::optional<RatVec> solve(RatMat a, RatVec b);

} // namespace pbv
