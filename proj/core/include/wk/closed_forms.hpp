#pragma once

#include <map>
#include <utility>

#include "wk/evaluator.hpp"
#include "wk/rational.hpp"
#include "wk/report.hpp"

namespace wk {

// Exact bivariate power series truncated at a total degree. Only nonzero
// coefficients are stored.
class BivariateSeries {
 public:
  BivariateSeries(std::map<std::pair<int, int>, Rational> coefficients, int truncation)
      : coefficients_(std::move(coefficients)), truncation_(truncation) {}

  // Zero when absent. Throws std::domain_error beyond the truncation
  // degree, where coefficients are unknown rather than zero.
  Rational coefficient(int i, int j) const;

  int truncation_order() const { return truncation_; }
  std::size_t nonzero_count() const { return coefficients_.size(); }

 private:
  std::map<std::pair<int, int>, Rational> coefficients_;
  int truncation_;
};

// The generating series of all 2-point correlators, assembled from the
// closed product form 1/(x+y) * exp((x^3+y^3)/24) * sum_k k!/(2k+1)! *
// (xy(x+y)/2)^k. The polynomial numerator minus its constant term is
// exactly divisible by (x+y); the division is performed with a zero
// remainder check at every degree, so no negative-degree term can survive
// unnoticed. coefficient(d1, d2) = <tau_{d1} tau_{d2}>_g for
// d1 + d2 = 3g - 1, and 0 for degrees not of that form.
BivariateSeries dijkgraaf_two_point_series(int max_total_degree);

// <tau_d tau_{3g-1-d}>_g from the closed double sum over (i, k) plus the
// (-1)^(d mod 3) / (g! 24^g) * C(g-1, floor(d/3)) tail. Requires g >= 1 and
// 0 <= d <= 3g - 1. Must agree with the series oracle everywhere; the
// series is authoritative.
Rational two_point_coefficient_formula(int g, int d);

// Coefficient of x^{3g-2b} y^{2b} in the special 3-point series F_g(x,y,-y):
// the sum over a + c = g - b, a <= b of
// (a+b)! / (4^{a+b} 24^c (2a+2b+1)!! (b-a)! (2a+1)! c!).
// Equals sum_{j=0}^{2b} (-1)^j <tau_{3g-2b} tau_j tau_{2b-j}>_g. Returns 0
// when no (a, c) is admissible.
Rational faber_three_point_special(int g, int b);

// series == closed sum == DVV evaluator on every 2-point value with
// 1 <= g <= g_max, 0 <= d <= 3g-1.
VerificationReport crosscheck_two_point(const TauEvaluator& evaluator, int g_max);

// Alternating-sum identity for the special 3-point function, all
// 1 <= g <= g_max and 0 <= b <= g.
VerificationReport verify_faber_identity(const TauEvaluator& evaluator, int g_max);

}  // namespace wk
