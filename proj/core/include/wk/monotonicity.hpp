#pragma once

#include <cstddef>
#include <vector>

#include "wk/evaluator.hpp"
#include "wk/parallel.hpp"
#include "wk/report.hpp"

namespace wk {

// True iff <...tau_{d_i}...tau_{d_j}...> <= the value after the smoothing
// step (d_i+1, d_j-1), compared exactly. Requires a dimension-valid stable
// spec and d_i < d_j.
bool check_monotone_instance(const TauEvaluator& evaluator, int g,
                             const std::vector<int>& exponents,
                             std::size_t i, std::size_t j);

// Sweeps the reduced family: n <= 3g-1 and, in sorted order, every
// exponent beyond the two smallest is >= 2. Each spec is tested on every
// exponent-value pair (a, b) with a < b.
VerificationReport verify_monotonicity(const TauEvaluator& evaluator, int g,
                                       const SweepOptions& options = {});

// Unreduced sweep up to an explicit point count, no lower bound on the
// exponents; used to spot-check that the reduction loses nothing.
VerificationReport verify_monotonicity_full(const TauEvaluator& evaluator, int g,
                                            int n_max, const SweepOptions& options = {});

}  // namespace wk
