#include <doctest.h>

#include <random>
#include <stdexcept>

#include "wk/monotonicity.hpp"

using namespace wk;

namespace {

const TauEvaluator& tau() { return default_evaluator(); }

}  // namespace

TEST_CASE("single smoothing instances") {
  CHECK(check_monotone_instance(tau(), 0, {0, 0, 0, 0, 2}, 3, 4));  // 1 <= 2
  CHECK(check_monotone_instance(tau(), 1, {0, 2}, 0, 1));           // 1/24 <= 1/24
  CHECK(check_monotone_instance(tau(), 2, {1, 4}, 0, 1));           // 1/384 <= 29/5760
  CHECK_THROWS_AS(check_monotone_instance(tau(), 1, {1, 1}, 0, 1), std::domain_error);
  CHECK_THROWS_AS(check_monotone_instance(tau(), 1, {0, 2}, 1, 0), std::domain_error);
}

TEST_CASE("reduced sweep passes through genus 3") {
  const VerificationReport g0 = verify_monotonicity(tau(), 0);
  CHECK(g0.pass());
  CHECK(g0.instances == 0);  // the reduced family is empty at genus 0

  const VerificationReport g1 = verify_monotonicity(tau(), 1);
  CHECK(g1.pass());
  CHECK(g1.instances == 1);  // only <tau_0 tau_2>_1 <= <tau_1 tau_1>_1

  CHECK(verify_monotonicity(tau(), 2).pass());
  CHECK(verify_monotonicity(tau(), 3).pass());
}

TEST_CASE("unreduced sweep agrees at low genus") {
  // genus 0 carries the multinomial inequality; the reduced family is
  // empty there, so sweep the raw specs up to seven points
  const VerificationReport g0 = verify_monotonicity_full(tau(), 0, 7);
  CHECK(g0.pass());
  CHECK(g0.instances > 0);

  CHECK(verify_monotonicity_full(tau(), 1, 4).pass());
  CHECK(verify_monotonicity_full(tau(), 2, 7).pass());
}

TEST_CASE("multi-step redistribution chains stay monotone") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const int g = std::uniform_int_distribution<int>(0, 2)(rng);
    const int n = std::uniform_int_distribution<int>(std::max(3 - 2 * g, 2), 6)(rng);
    std::vector<int> d(n, 0);
    for (long unit = 0; unit < 3L * g - 3 + n; ++unit) {
      d[std::uniform_int_distribution<int>(0, n - 1)(rng)] += 1;
    }
    TauSpec spec = normalize(g, d);
    Rational previous = tau().intersection(spec);

    // walk toward evenness one unit at a time; values must never decrease
    for (;;) {
      auto& e = spec.exponents;
      if (e.back() - e.front() < 2) break;
      e.front() += 1;
      e.back() -= 1;
      spec = normalize(g, e);
      const Rational current = tau().intersection(spec);
      CHECK(previous <= current);
      previous = current;
    }
  }
}
