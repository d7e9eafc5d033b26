#pragma once

#include "pbv/poisson.hpp"

#include <map>
#include <string>

namespace pbv {

struct StrandEntry {
  std::size_t dim_kernel = 0;
  std::size_t dim_image_in = 0;
  std::size_t dim_homology = 0;
};

/// Exact per-strand dimensions, keyed by (complex degree p, coefficient
/// degree d).
struct StrandTable {
  std::map<std::pair<unsigned, unsigned>, StrandEntry> entries;

  std::string to_text() const;
  /// machine-readable `p d dim_ker dim_im dim_H` lines
  std::string to_lines() const;
};

/// dim PH^p at each coefficient degree in [d_lo, d_hi], for p in
/// [p_lo, p_hi]. Requires a free polynomial presentation (NotFreePresentation)
/// with a bracket table homogeneous of one common degree (NotGraded); a
/// twist must have coefficients homogeneous of the matching degree.
StrandTable cohomology_dims(const PoissonStructure& ps,
                            const std::optional<PoissonDerivation>& phi, unsigned p_lo,
                            unsigned p_hi, unsigned d_lo, unsigned d_hi);

/// dim PH_q(R, R_phi) at each coefficient degree, same preconditions.
StrandTable homology_dims(const PoissonStructure& ps, const std::optional<PoissonDerivation>& phi,
                          unsigned q_lo, unsigned q_hi, unsigned d_lo, unsigned d_hi);

/// Compares dim PH^p(R) with dim PH_{n-p}(R, R_t) (modular twist) at equal
/// coefficient degree; reports every mismatch.
ValidationReport duality_dim_check(const PoissonStructure& ps, unsigned p_lo, unsigned p_hi,
                                   unsigned d_lo, unsigned d_hi);

} // namespace pbv
