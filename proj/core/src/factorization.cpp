#include "wk/factorization.hpp"

#include <algorithm>

namespace wk {

PrimeFactorization PrimeFactorization::of(const Integer& n) {
  if (n <= 0) throw std::domain_error("factorization of a non-positive integer");
  PrimeFactorization out;
  Integer rest = n;
  Integer p(2);
  while (p * p <= rest) {
    if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      int e = 0;
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++e;
      }
      out.factors_[p.get_ui()] = e;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (rest > 1) out.factors_[rest.get_ui()] = 1;
  return out;
}

PrimeFactorization PrimeFactorization::of_smooth(const Integer& n, long bound) {
  if (n <= 0) throw std::domain_error("factorization of a non-positive integer");
  PrimeFactorization out;
  Integer rest = n;
  for (std::uint64_t p : primes_up_to(bound < 0 ? 0 : static_cast<std::uint64_t>(bound))) {
    if (rest == 1) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.factors_[p] = e;
  }
  if (rest != 1) {
    throw SmoothnessError("cofactor " + rest.get_str() + " of " + n.get_str() +
                          " has a prime factor beyond " + std::to_string(bound));
  }
  return out;
}

int PrimeFactorization::ord(std::uint64_t p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

void PrimeFactorization::set(std::uint64_t p, int exponent) {
  if (!is_prime(p) || exponent < 1) {
    throw std::domain_error("factor must be a prime with exponent >= 1");
  }
  factors_[p] = exponent;
}

void PrimeFactorization::lcm_with(const PrimeFactorization& other) {
  for (auto [p, e] : other.factors_) {
    auto it = factors_.find(p);
    if (it == factors_.end()) {
      factors_.emplace(p, e);
    } else {
      it->second = std::max(it->second, e);
    }
  }
}

bool PrimeFactorization::divides(const PrimeFactorization& other) const {
  for (auto [p, e] : factors_) {
    if (other.ord(p) < e) return false;
  }
  return true;
}

Integer PrimeFactorization::value() const {
  Integer out(1);
  for (auto [p, e] : factors_) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(e));
    out *= power;
  }
  return out;
}

std::string PrimeFactorization::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (auto [p, e] : factors_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
  }
  return primes;
}

int ord(std::uint64_t p, const Integer& n) {
  if (!is_prime(p)) throw std::domain_error("ord needs a prime");
  if (n == 0) throw std::domain_error("ord of zero");
  Integer rest = abs(n);
  int e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++e;
  }
  return e;
}

}  // namespace wk
