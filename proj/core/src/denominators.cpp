#include "wk/denominators.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <vector>

#include "wk/closed_forms.hpp"

namespace wk {

namespace {

PrimeFactorization lcm_of_denominators(const std::vector<Integer>& denominators, long bound) {
  PrimeFactorization acc;
  for (const Integer& den : denominators) {
    acc.lcm_with(PrimeFactorization::of_smooth(den, bound));
  }
  return acc;
}

std::vector<Integer> sweep_denominators(const TauEvaluator& evaluator,
                                        const std::vector<TauSpec>& specs,
                                        const SweepOptions& options) {
  std::vector<Integer> denominators(specs.size());
  std::atomic<std::size_t> done{0};
  parallel_for(specs.size(), options.jobs, [&](std::size_t i) {
    denominators[i] = denominator_of(evaluator.intersection(specs[i]));
    if (options.progress) options.progress(done.fetch_add(1) + 1, specs.size());
  });
  return denominators;
}

}  // namespace

PrimeFactorization denominator_lcm(const TauEvaluator& evaluator, int g, int n,
                                   const SweepOptions& options) {
  const auto specs = enumerate_specs(g, n, 0);
  return lcm_of_denominators(sweep_denominators(evaluator, specs, options), 2L * g + 1);
}

PrimeFactorization denominator_lcm_interior(const TauEvaluator& evaluator, int g,
                                            const SweepOptions& options) {
  if (g < 2) throw std::domain_error("interior lcm is defined for g >= 2");
  std::vector<TauSpec> specs;
  for (int n = 1; n <= 3 * g - 3; ++n) {
    auto batch = enumerate_specs(g, n, 2);
    specs.insert(specs.end(), std::make_move_iterator(batch.begin()),
                 std::make_move_iterator(batch.end()));
  }
  return lcm_of_denominators(sweep_denominators(evaluator, specs, options), 2L * g + 1);
}

PrimeFactorization kappa_denominator_lcm(const KappaEvaluator& evaluator, int g,
                                         const SweepOptions& options) {
  if (g < 2) throw std::domain_error("kappa lcm is defined for g >= 2");
  std::vector<KappaSpec> specs;
  for (int m = 1; m <= 3 * g - 3; ++m) {
    for (auto& tuple : sorted_tuples(3L * g - 3, m, 1)) {
      specs.push_back(KappaSpec{g, std::move(tuple)});
    }
  }
  std::vector<Integer> denominators(specs.size());
  std::atomic<std::size_t> done{0};
  parallel_for(specs.size(), options.jobs, [&](std::size_t i) {
    denominators[i] = denominator_of(evaluator.kappa_integral(specs[i]));
    if (options.progress) options.progress(done.fetch_add(1) + 1, specs.size());
  });
  return lcm_of_denominators(denominators, 2L * g + 1);
}

VerificationReport verify_divisibility_chain(const TauEvaluator& evaluator, int g,
                                             int n_max, const SweepOptions& options) {
  VerificationReport report;
  report.claim = "divisibility-chain g=" + std::to_string(g);
  const int n_min = std::max(1, 3 - 2 * g);
  PrimeFactorization prev = denominator_lcm(evaluator, g, n_min, options);
  for (int n = n_min; n < n_max; ++n) {
    PrimeFactorization next = denominator_lcm(evaluator, g, n + 1, options);
    report.record(prev.divides(next),
                  "D(" + std::to_string(g) + "," + std::to_string(n) + ") | D(" +
                      std::to_string(g) + "," + std::to_string(n + 1) + ")",
                  "divisor of " + next.str(), prev.str());
    prev = std::move(next);
  }
  return report;
}

VerificationReport verify_interior_lcm_prime_orders(const TauEvaluator& evaluator, int g,
                                         const SweepOptions& options) {
  VerificationReport report;
  report.claim = "interior-lcm-prime-orders g=" + std::to_string(g);
  if (g < 2) throw std::domain_error("needs g >= 2");
  const PrimeFactorization dg = denominator_lcm_interior(evaluator, g, options);
  const Integer g_factorial = factorial(static_cast<unsigned long>(g));
  for (std::uint64_t p : primes_up_to(2L * g + 1)) {
    long expected;
    if (p == 2) {
      expected = 3L * g + ord(2, g_factorial);
    } else if (p == 3) {
      expected = g + ord(3, g_factorial);
    } else {
      expected = 2L * g / (static_cast<long>(p) - 1);
    }
    report.record(dg.ord(p) == expected, "p=" + std::to_string(p),
                  "ord=" + std::to_string(expected), "ord=" + std::to_string(dg.ord(p)));
  }
  return report;
}

VerificationReport verify_interior_lcm_prime_profile(const TauEvaluator& evaluator, int g,
                                      const SweepOptions& options) {
  VerificationReport report;
  report.claim = "interior-lcm-prime-profile g=" + std::to_string(g);
  if (g < 2) throw std::domain_error("needs g >= 2");
  const PrimeFactorization dg = denominator_lcm_interior(evaluator, g, options);

  std::uint64_t largest = 0;
  for (auto [p, e] : dg.factors()) largest = std::max(largest, p);
  report.record(largest <= static_cast<std::uint64_t>(2 * g + 1), "(i) largest prime",
                "<= " + std::to_string(2 * g + 1), std::to_string(largest));

  for (std::uint64_t p : primes_up_to(2L * g + 1)) {
    report.record(dg.ord(p) >= 1, "(ii) p=" + std::to_string(p) + " divides",
                  "ord>=1", "ord=" + std::to_string(dg.ord(p)));
  }

  if (is_prime(2L * g + 1)) {
    report.record(dg.ord(2 * g + 1) == 1, "(iii) ord(2g+1)", "1",
                  std::to_string(dg.ord(2 * g + 1)));
  }

  const long expected2 = 3L * g + ord(2, factorial(static_cast<unsigned long>(g)));
  report.record(dg.ord(2) == expected2, "(iv) ord(2)", std::to_string(expected2),
                std::to_string(dg.ord(2)));
  return report;
}

VerificationReport verify_two_point_denominator_profile(int g) {
  VerificationReport report;
  report.claim = "two-point-denominator-profile g=" + std::to_string(g);
  if (g < 2) throw std::domain_error("needs g >= 2");

  const BivariateSeries series = dijkgraaf_two_point_series(3 * g + 1);
  std::vector<Integer> denominators(3 * g);
  for (int d = 0; d <= 3 * g - 1; ++d) {
    denominators[d] = denominator_of(series.coefficient(d, 3 * g - 1 - d));
  }

  // (i) after removing all primes <= 2g+1 nothing may remain
  bool smooth = true;
  std::string offender;
  PrimeFactorization d_g2;
  for (const Integer& den : denominators) {
    try {
      d_g2.lcm_with(PrimeFactorization::of_smooth(den, 2L * g + 1));
    } catch (const SmoothnessError& e) {
      smooth = false;
      offender = e.what();
    }
  }
  report.record(smooth, "(i) primes of D(" + std::to_string(g) + ",2)",
                "all <= " + std::to_string(2 * g + 1), smooth ? "ok" : offender);
  if (!smooth) return report;

  for (std::uint64_t p : primes_up_to(2L * g + 1)) {
    if (p < static_cast<std::uint64_t>(g + 1)) continue;
    const int d = static_cast<int>((p - 1) / 2);
    const int o = ord(p, denominators[d]);
    report.record(o >= 1, "(ii) p=" + std::to_string(p) + " at d=" + std::to_string(d),
                  "p divides denom", "ord=" + std::to_string(o));
  }

  if (is_prime(2L * g + 1)) {
    const std::uint64_t p = 2L * g + 1;
    for (int d = 0; d <= 3 * g - 1; ++d) {
      const bool divides = ord(p, denominators[d]) >= 1;
      const bool should = g <= d && d <= 2 * g - 1;
      report.record(divides == should, "(iii) d=" + std::to_string(d),
                    should ? "2g+1 divides" : "2g+1 does not divide",
                    divides ? "divides" : "does not divide");
    }
    report.record(d_g2.ord(p) == 1, "(iv) ord(2g+1, D(g,2))", "1",
                  std::to_string(d_g2.ord(p)));
  }
  return report;
}

VerificationReport verify_three_point_prime_squares(int g, const PrimeFactorization& d3) {
  VerificationReport report;
  report.claim = "ord-dg3-lower-bound g=" + std::to_string(g);
  if (g < 2) throw std::domain_error("needs g >= 2");
  for (std::uint64_t p : primes_up_to(g + 1)) {
    report.record(d3.ord(p) >= 2, "p=" + std::to_string(p), "ord>=2",
                  "ord=" + std::to_string(d3.ord(p)));
  }
  return report;
}

VerificationReport verify_three_point_prime_squares(const TauEvaluator& evaluator, int g,
                                        const SweepOptions& options) {
  return verify_three_point_prime_squares(g, denominator_lcm(evaluator, g, 3, options));
}

}  // namespace wk
