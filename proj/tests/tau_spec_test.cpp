#include <doctest.h>

#include <stdexcept>

#include "wk/tau_spec.hpp"

using namespace wk;

TEST_CASE("normalize sorts exponents and is idempotent") {
  const TauSpec a = normalize(1, {1});
  CHECK(a.genus == 1);
  CHECK(a.exponents == std::vector<int>{1});

  const TauSpec b = normalize(0, {2, 0, 1});
  CHECK(b.exponents == std::vector<int>{0, 1, 2});
  CHECK(normalize(b.genus, b.exponents) == b);
}

TEST_CASE("normalize rejects negative input") {
  CHECK_THROWS_AS(normalize(2, {4, -1}), std::domain_error);
  CHECK_THROWS_AS(normalize(-1, {0}), std::domain_error);
}

TEST_CASE("stability and dimension validity") {
  CHECK(normalize(1, {1}).dimension_valid());        // 1 = 3-3+1
  CHECK(normalize(0, {0, 0, 0}).dimension_valid());  // 0 = -3+3
  CHECK_FALSE(normalize(1, {0, 0, 0}).dimension_valid());
  CHECK_FALSE(normalize(0, {0, 0}).stable());
  CHECK_FALSE(normalize(1, std::vector<int>{}).stable());
  CHECK(normalize(2, std::vector<int>{}).stable());
}

TEST_CASE("enumerate_specs lists canonical tuples lexicographically") {
  const auto g1n2 = enumerate_specs(1, 2, 0);
  REQUIRE(g1n2.size() == 2);
  CHECK(g1n2[0].exponents == std::vector<int>{0, 2});
  CHECK(g1n2[1].exponents == std::vector<int>{1, 1});

  const auto g2n2 = enumerate_specs(2, 2, 0);
  REQUIRE(g2n2.size() == 3);
  CHECK(g2n2[0].exponents == std::vector<int>{0, 5});
  CHECK(g2n2[1].exponents == std::vector<int>{1, 4});
  CHECK(g2n2[2].exponents == std::vector<int>{2, 3});

  const auto g0n5 = enumerate_specs(0, 5, 0);
  REQUIRE(g0n5.size() == 2);
  CHECK(g0n5[0].exponents == std::vector<int>{0, 0, 0, 0, 2});
  CHECK(g0n5[1].exponents == std::vector<int>{0, 0, 0, 1, 1});
}

TEST_CASE("enumerate_specs edge cases") {
  CHECK_THROWS_AS(enumerate_specs(0, 2, 0), std::domain_error);  // unstable
  CHECK(enumerate_specs(2, 5, 2).empty());  // 2*5 > 3*2-3+5 infeasible
  for (const auto& spec : enumerate_specs(3, 4, 2)) {
    CHECK(spec.dimension_valid());
    CHECK(spec.exponents.front() >= 2);
  }
}

TEST_CASE("sorted_tuples covers every partition exactly once") {
  // partitions of 10 into exactly 4 non-negative parts = partitions of 10
  // with at most 4 parts = 23
  CHECK(sorted_tuples(10, 4, 0).size() == 23);
  CHECK(sorted_tuples(0, 0, 0).size() == 1);  // the empty tuple
  CHECK(sorted_tuples(3, 0, 0).empty());
}
