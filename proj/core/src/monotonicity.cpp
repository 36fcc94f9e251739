#include "wk/monotonicity.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace wk {

bool check_monotone_instance(const TauEvaluator& evaluator, int g,
                             const std::vector<int>& exponents,
                             std::size_t i, std::size_t j) {
  if (i >= exponents.size() || j >= exponents.size() || i == j) {
    throw std::domain_error("smoothing positions out of range");
  }
  if (exponents[i] >= exponents[j]) {
    throw std::domain_error("smoothing needs d_i < d_j");
  }
  const Rational before = evaluator.intersection(normalize(g, exponents));
  std::vector<int> smoothed = exponents;
  smoothed[i] += 1;
  smoothed[j] -= 1;
  const Rational after = evaluator.intersection(normalize(g, smoothed));
  return before <= after;
}

namespace {

VerificationReport sweep(const TauEvaluator& evaluator, int g,
                         const std::vector<TauSpec>& specs, std::string claim,
                         const SweepOptions& options) {
  VerificationReport report;
  report.claim = std::move(claim);

  struct SpecResult {
    long long instances = 0;
    std::vector<Witness> witnesses;
  };
  std::vector<SpecResult> results(specs.size());
  std::atomic<std::size_t> done{0};

  parallel_for(specs.size(), options.jobs, [&](std::size_t idx) {
    const TauSpec& spec = specs[idx];
    // one test per distinct value pair (a, b), a < b; positions beyond the
    // first of each value are symmetric copies
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < spec.points(); ++i) {
      for (std::size_t j = i + 1; j < spec.points(); ++j) {
        const int a = spec.exponents[i];
        const int b = spec.exponents[j];
        if (a >= b || !seen.emplace(a, b).second) continue;
        const bool ok = check_monotone_instance(evaluator, g, spec.exponents, i, j);
        ++results[idx].instances;
        if (!ok) {
          results[idx].witnesses.push_back(
              {spec_str(spec) + " pair=(" + std::to_string(a) + "," + std::to_string(b) + ")",
               "value <= smoothed value", "violated"});
        }
      }
    }
    if (options.progress) options.progress(done.fetch_add(1) + 1, specs.size());
  });

  for (const SpecResult& r : results) {
    report.instances += r.instances;
    report.witnesses.insert(report.witnesses.end(), r.witnesses.begin(), r.witnesses.end());
  }
  return report;
}

}  // namespace

VerificationReport verify_monotonicity(const TauEvaluator& evaluator, int g,
                                       const SweepOptions& options) {
  if (g < 0) throw std::domain_error("negative genus");
  std::vector<TauSpec> specs;
  for (int n = 1; n <= 3 * g - 1; ++n) {
    if (2L * g - 2 + n < 1) continue;
    for (auto& tuple : sorted_tuples(3L * g - 3 + n, n, 0)) {
      const bool interior_tail =
          std::all_of(tuple.begin() + std::min<std::size_t>(2, tuple.size()), tuple.end(),
                      [](int d) { return d >= 2; });
      if (interior_tail) specs.push_back(TauSpec{g, std::move(tuple)});
    }
  }
  return sweep(evaluator, g, specs, "smoothing-monotonicity g=" + std::to_string(g), options);
}

VerificationReport verify_monotonicity_full(const TauEvaluator& evaluator, int g,
                                            int n_max, const SweepOptions& options) {
  if (g < 0) throw std::domain_error("negative genus");
  std::vector<TauSpec> specs;
  for (int n = 1; n <= n_max; ++n) {
    if (2L * g - 2 + n < 1) continue;
    for (auto& tuple : sorted_tuples(3L * g - 3 + n, n, 0)) {
      specs.push_back(TauSpec{g, std::move(tuple)});
    }
  }
  return sweep(evaluator, g, specs,
               "smoothing-monotonicity-full g=" + std::to_string(g), options);
}

}  // namespace wk
