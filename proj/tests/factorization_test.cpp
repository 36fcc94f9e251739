#include <doctest.h>

#include <stdexcept>

#include "wk/factorization.hpp"

using namespace wk;

TEST_CASE("p-adic orders of plain integers") {
  CHECK(ord(2, Integer(1152)) == 7);
  CHECK(ord(3, Integer(1152)) == 2);
  CHECK(ord(7, Integer(24)) == 0);
  CHECK_THROWS_AS(ord(6, Integer(24)), std::domain_error);
  CHECK_THROWS_AS(ord(2, Integer(0)), std::domain_error);
}

TEST_CASE("factorization round trips and renders canonically") {
  const PrimeFactorization f = PrimeFactorization::of(Integer(1152));
  CHECK(f.ord(2) == 7);
  CHECK(f.ord(3) == 2);
  CHECK(f.ord(5) == 0);
  CHECK(f.str() == "2^7*3^2");
  CHECK(f.value() == 1152);

  PrimeFactorization g;
  g.set(2, 7);
  g.set(3, 2);
  g.set(5, 1);
  CHECK(g.str() == "2^7*3^2*5");
  CHECK(ord(5, g) == 1);

  CHECK(PrimeFactorization::of(Integer(1)).str() == "1");
  CHECK(PrimeFactorization::of(Integer(1)).value() == 1);
}

TEST_CASE("lcm merge takes pointwise maxima in any order") {
  PrimeFactorization a = PrimeFactorization::of(Integer(1152));   // 2^7 3^2
  const PrimeFactorization b = PrimeFactorization::of(Integer(240));  // 2^4 3 5
  PrimeFactorization ab = a;
  ab.lcm_with(b);
  PrimeFactorization ba = b;
  ba.lcm_with(a);
  CHECK(ab == ba);
  CHECK(ab.str() == "2^7*3^2*5");
  CHECK(a.divides(ab));
  CHECK(b.divides(ab));
  CHECK_FALSE(ab.divides(a));
}

TEST_CASE("smooth factoring enforces the prime bound") {
  CHECK(PrimeFactorization::of_smooth(Integer(5760), 5).str() == "2^7*3^2*5");
  CHECK_THROWS_AS(PrimeFactorization::of_smooth(Integer(5760), 3), SmoothnessError);
  CHECK_THROWS_AS(PrimeFactorization::of_smooth(Integer(7), 5), SmoothnessError);
  CHECK_NOTHROW(PrimeFactorization::of_smooth(Integer(1), 1));
}

TEST_CASE("prime helpers") {
  CHECK(primes_up_to(13) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
  CHECK(primes_up_to(1).empty());
  CHECK(is_prime(2));
  CHECK(is_prime(23));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
