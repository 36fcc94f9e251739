#include <doctest.h>

#include <stdexcept>

#include "wk/closed_forms.hpp"

using namespace wk;

TEST_CASE("two-point series reproduces known coefficients") {
  const BivariateSeries series = dijkgraaf_two_point_series(10);
  CHECK(series.coefficient(0, 2) == make_rational(1, 24));
  CHECK(series.coefficient(1, 1) == make_rational(1, 24));
  CHECK(series.coefficient(2, 3) == make_rational(29, 5760));
  CHECK(series.coefficient(0, 1) == 0);
  CHECK(series.coefficient(0, 0) == 0);
}

TEST_CASE("two-point series is symmetric and supported on degree 2 mod 3") {
  const BivariateSeries series = dijkgraaf_two_point_series(16);
  for (int i = 0; i <= 16; ++i) {
    for (int j = 0; i + j <= 16; ++j) {
      CHECK(series.coefficient(i, j) == series.coefficient(j, i));
      if ((i + j) % 3 != 2) CHECK(series.coefficient(i, j) == 0);
    }
  }
}

TEST_CASE("two-point series refuses queries beyond the truncation") {
  const BivariateSeries series = dijkgraaf_two_point_series(5);
  CHECK_THROWS_AS(series.coefficient(3, 3), std::domain_error);
  CHECK_THROWS_AS(series.coefficient(-1, 2), std::domain_error);
}

TEST_CASE("closed two-point sum matches known values and its own symmetry") {
  CHECK(two_point_coefficient_formula(1, 1) == make_rational(1, 24));
  CHECK(two_point_coefficient_formula(1, 0) == make_rational(1, 24));
  CHECK(two_point_coefficient_formula(2, 2) == make_rational(29, 5760));
  for (int g = 1; g <= 7; ++g) {
    for (int d = 0; d <= 3 * g - 1; ++d) {
      CHECK(two_point_coefficient_formula(g, d) ==
            two_point_coefficient_formula(g, 3 * g - 1 - d));
    }
  }
  CHECK_THROWS_AS(two_point_coefficient_formula(2, 6), std::domain_error);
  CHECK_THROWS_AS(two_point_coefficient_formula(0, 0), std::domain_error);
}

TEST_CASE("series, closed sum and evaluator agree up to genus 8") {
  const VerificationReport report = crosscheck_two_point(default_evaluator(), 8);
  CHECK(report.pass());
  CHECK(report.instances == 2 * (3 * (1 + 8) * 8 / 2));  // two checks per (g, d)
}

TEST_CASE("special three-point coefficients") {
  for (int g = 1; g <= 6; ++g) {
    CHECK(faber_three_point_special(g, 0) ==
          make_rational(1, pow_integer(24, g) * factorial(g)));
    CHECK(faber_three_point_special(g, g) ==
          make_rational(1, pow_integer(4, g) * odd_double_factorial(2 * g + 1)));
  }
  CHECK(faber_three_point_special(2, 2) == make_rational(1, 240));
  CHECK(faber_three_point_special(2, 1) == make_rational(7, 1440));
  CHECK(faber_three_point_special(2, 3) == 0);  // no admissible (a, c)
  CHECK_THROWS_AS(faber_three_point_special(0, 0), std::domain_error);
}

TEST_CASE("alternating sum identity for the special three-point series") {
  const VerificationReport report = verify_faber_identity(default_evaluator(), 4);
  CHECK(report.pass());
  CHECK(report.instances == 2 + 3 + 4 + 5);
}
