#pragma once

#include "pbv/poisson.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pbv {

/// Knobs for the randomized identity suites. The default seed is fixed so
/// reports are reproducible; every failure message carries the inputs that
/// produced it.
struct CheckOptions {
  unsigned samples = 100;
  std::uint64_t seed = 271828;
  int max_degree = 3;
};

/// Names accepted by run_identity_suite, in execution order of "all".
std::vector<std::string> identity_suites();

/// Runs one named suite of exact identity checks against the given
/// structure; "all" runs every suite. Throws std::invalid_argument for an
/// unknown suite name.
ValidationReport run_identity_suite(const PoissonStructure& ps, const std::string& suite,
                                    const CheckOptions& opts = {});

} // namespace pbv
