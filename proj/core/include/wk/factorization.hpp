#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wk/rational.hpp"

namespace wk {

// Thrown when a denominator refuses to factor over the expected prime
// range; firing anywhere means a computed value contradicts the prime
// bound this engine relies on, so it is never caught and repaired.
class SmoothnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Product of prime powers; the empty map is 1. Exponents are >= 1.
class PrimeFactorization {
 public:
  PrimeFactorization() = default;

  // Full trial-division factorization; intended for small integers.
  static PrimeFactorization of(const Integer& n);

  // Factors n over the primes <= bound; throws SmoothnessError if a
  // cofactor remains. Same as `of` when the input is known smooth, but
  // with the hard assertion built in.
  static PrimeFactorization of_smooth(const Integer& n, long bound);

  int ord(std::uint64_t p) const;
  void set(std::uint64_t p, int exponent);

  // lcm: pointwise maximum of exponents. Associative and commutative, so
  // any reduction order yields the identical result.
  void lcm_with(const PrimeFactorization& other);

  bool divides(const PrimeFactorization& other) const;

  Integer value() const;

  // Canonical rendering: primes ascending, '^' omitted for exponent 1,
  // e.g. "2^7*3^2*5"; "1" for the empty product.
  std::string str() const;

  const std::map<std::uint64_t, int>& factors() const { return factors_; }
  bool operator==(const PrimeFactorization&) const = default;

 private:
  std::map<std::uint64_t, int> factors_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// p-adic order of n != 0; throws std::domain_error unless p is prime.
int ord(std::uint64_t p, const Integer& n);

inline int ord(std::uint64_t p, const PrimeFactorization& f) {
  if (!is_prime(p)) throw std::domain_error("ord needs a prime");
  return f.ord(p);
}

}  // namespace wk
