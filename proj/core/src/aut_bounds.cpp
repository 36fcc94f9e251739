#include "wk/aut_bounds.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace wk {

long hurwitz_bound(int g) {
  if (g < 2) throw std::domain_error("hurwitz bound needs g >= 2");
  return 84L * (g - 1);
}

bool validate_branching_datum(const BranchingDatum& datum) {
  if (datum.surface_genus < 2 || datum.quotient_genus < 0 || datum.group_order < 1) {
    throw std::domain_error("branching datum fields out of range");
  }
  for (long n : datum.branch_orders) {
    if (n < 2) throw std::domain_error("branch orders must be >= 2");
  }

  Rational ramification(2L * datum.quotient_genus - 2);
  for (long n : datum.branch_orders) {
    ramification += Rational(1) - make_rational(1, n);
  }
  if (Rational(datum.group_order) * ramification != Rational(2L * datum.surface_genus - 2)) {
    return false;
  }

  Integer orders_lcm(1);
  for (long n : datum.branch_orders) {
    mpz_lcm_ui(orders_lcm.get_mpz_t(), orders_lcm.get_mpz_t(), static_cast<unsigned long>(n));
  }
  Integer bound = Integer(2L * datum.surface_genus - 2) * orders_lcm;
  return mpz_divisible_ui_p(bound.get_mpz_t(), static_cast<unsigned long>(datum.group_order));
}

long harvey_min_genus(std::uint64_t p, int r) {
  if (!is_prime(p) || r < 1) throw std::domain_error("needs a prime p and r >= 1");
  Integer v = Integer(p - 1) * pow_integer(p, static_cast<unsigned long>(r - 1));
  if (v <= 4) return 2;
  // v > 4 is even here: p odd makes p-1 even, and p = 2 contributes 2^(r-1)
  Integer genus = v / 2;
  if (!genus.fits_slong_p()) throw std::domain_error("genus out of range");
  return genus.get_si();
}

int prime_power_bound(std::uint64_t p, int g) {
  if (!is_prime(p)) throw std::domain_error("needs a prime");
  if (g < 2) throw std::domain_error("needs g >= 2");
  const Integer cap = Integer(2) * Integer(p) * g;
  Integer lhs(p - 1);  // p^k (p-1), starting at k = 0
  int k = 0;
  while (lhs * Integer(p) <= cap) {
    lhs *= Integer(p);
    ++k;
  }
  return k + ord(p, Integer(2L * (g - 1)));
}

long stable_prime_bound(int g) {
  if (g < 2) throw std::domain_error("needs g >= 2");
  return 2L * g + 1;
}

VerificationReport verify_aut_orders_divide_three_point(int g, const PrimeFactorization& d3) {
  VerificationReport report;
  report.claim = "aut-order-divides-d3 g=" + std::to_string(g);
  if (g < 2) throw std::domain_error("needs g >= 2");
  for (std::uint64_t p : primes_up_to(2L * g + 1)) {
    const int bound = prime_power_bound(p, g);
    report.record(bound <= d3.ord(p), "p=" + std::to_string(p),
                  "bound " + std::to_string(bound) + " <= ord",
                  "ord=" + std::to_string(d3.ord(p)));
  }
  return report;
}

StableCounterexample stable_counterexample(int g, std::uint64_t p) {
  if (!is_prime(p) || p < 5) throw std::domain_error("needs a prime p >= 5");
  const long n = 2L * g / (static_cast<long>(p) - 1);
  if (n < 3) {
    throw std::domain_error("sphere with " + std::to_string(n) + " nodes is unstable");
  }
  StableCounterexample out;
  out.components = n;
  out.ord_lower_bound = n + ord(p, Integer(n));
  out.exceeds = out.ord_lower_bound > n;
  return out;
}

}  // namespace wk
