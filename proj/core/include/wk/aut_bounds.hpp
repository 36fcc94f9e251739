#pragma once

#include <cstdint>
#include <vector>

#include "wk/factorization.hpp"
#include "wk/rational.hpp"
#include "wk/report.hpp"

namespace wk {

// |Aut(X)| <= 84(g-1) for a smooth genus-g >= 2 surface.
long hurwitz_bound(int g);

// A candidate quotient X -> X/G with its branching profile.
struct BranchingDatum {
  int surface_genus = 0;       // g >= 2
  int quotient_genus = 0;      // g0 >= 0
  std::vector<long> branch_orders;  // n_i >= 2
  long group_order = 0;        // |G| >= 1
};

// True iff 2g-2 = |G| (2g0 - 2 + sum (1 - 1/n_i)) holds exactly in
// rational arithmetic and |G| divides (2g-2) lcm(n_i).
bool validate_branching_datum(const BranchingDatum& datum);

// Minimal genus of a surface carrying an automorphism of order p^r:
// max(2, (p-1) p^(r-1) / 2).
long harvey_min_genus(std::uint64_t p, int r);

// Upper bound on ord(p, |Aut(X)|) at genus g: the largest k with
// p^k (p-1) <= 2pg, plus ord(p, 2(g-1)). Exact integer comparisons, no
// floating-point logarithm.
int prime_power_bound(std::uint64_t p, int g);

// Largest prime that can divide the automorphism order of a genus-g
// stable curve: 2g+1.
long stable_prime_bound(int g);

// prime_power_bound(p, g) <= ord(p, d3) for every prime p <= 2g+1; a pass
// means every smooth automorphism order at genus g divides the
// three-point denominator lcm behind d3.
VerificationReport verify_aut_orders_divide_three_point(int g, const PrimeFactorization& d3);

// n = floor(2g/(p-1)) genus-(p-1)/2 surfaces glued to a sphere at the
// n-th roots of unity. Each component carries an order-p automorphism and
// the rotation of the spokes contributes ord(p, n), so ord(p, |Aut|) is at
// least n + ord(p, n) -- exceeding the conjectured smooth bound exactly
// when p | n.
struct StableCounterexample {
  long components = 0;       // n
  long ord_lower_bound = 0;  // n + ord(p, n)
  bool exceeds = false;
};

StableCounterexample stable_counterexample(int g, std::uint64_t p);

}  // namespace wk
