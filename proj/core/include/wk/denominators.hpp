#pragma once

#include "wk/evaluator.hpp"
#include "wk/factorization.hpp"
#include "wk/kappa.hpp"
#include "wk/parallel.hpp"
#include "wk/report.hpp"

namespace wk {

// D_{g,n}: lcm of denominators of every psi intersection number with n
// points at genus g. Denominators are factored over the primes <= 2g+1;
// the smoothness assertion fires if anything larger ever appears.
PrimeFactorization denominator_lcm(const TauEvaluator& evaluator, int g, int n,
                                   const SweepOptions& options = {});

// The Itzykson-Zuber variant: all exponents >= 2, every n from 1 to 3g-3.
// Requires g >= 2.
PrimeFactorization denominator_lcm_interior(const TauEvaluator& evaluator, int g,
                                            const SweepOptions& options = {});

// lcm of denominators of all pure kappa integrals at genus g (indices
// >= 1 summing to 3g-3). Requires g >= 2.
PrimeFactorization kappa_denominator_lcm(const KappaEvaluator& evaluator, int g,
                                         const SweepOptions& options = {});

// D_{g,n} | D_{g,n+1} for every applicable n < n_max.
VerificationReport verify_divisibility_chain(const TauEvaluator& evaluator, int g,
                                             int n_max, const SweepOptions& options = {});

// Conjectured prime orders of the interior lcm: ord(2) = 3g + ord(2, g!),
// ord(3) = g + ord(3, g!), ord(p) = floor(2g/(p-1)) for primes 5 <= p <= 2g+1.
VerificationReport verify_interior_lcm_prime_orders(const TauEvaluator& evaluator, int g,
                                         const SweepOptions& options = {});

// Four-part prime profile of the interior lcm: (i) no prime beyond 2g+1,
// (ii) every prime <= 2g+1 appears, (iii) exponent of a prime 2g+1 is
// exactly 1, (iv) ord(2) = 3g + ord(2, g!).
VerificationReport verify_interior_lcm_prime_profile(const TauEvaluator& evaluator, int g,
                                      const SweepOptions& options = {});

// Two-point denominator profile, checked against the series oracle alone:
// (i) no prime beyond 2g+1 in D_{g,2}; (ii) each prime g+1 <= p <= 2g+1
// divides the denominator at d = (p-1)/2; (iii) when 2g+1 is prime it
// divides the denominator exactly for g <= d <= 2g-1; (iv) then its order
// in D_{g,2} is 1.
VerificationReport verify_two_point_denominator_profile(int g);

// ord(p, D_{g,3}) >= 2 for every prime p <= g+1.
VerificationReport verify_three_point_prime_squares(int g, const PrimeFactorization& d3);
VerificationReport verify_three_point_prime_squares(const TauEvaluator& evaluator, int g,
                                        const SweepOptions& options = {});

}  // namespace wk
