#include "wk/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace wk {

Rational BivariateSeries::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i + j > truncation_) {
    throw std::domain_error("coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                            ") beyond truncation degree " + std::to_string(truncation_));
  }
  auto it = coefficients_.find({i, j});
  return it == coefficients_.end() ? Rational(0) : it->second;
}

namespace {

// Dense triangular grid of coefficients with total degree <= order.
class Grid {
 public:
  explicit Grid(int order) : order_(order), cells_((order + 1) * (order + 1)) {}

  Rational& at(int i, int j) { return cells_[i * (order_ + 1) + j]; }
  const Rational& at(int i, int j) const { return cells_[i * (order_ + 1) + j]; }
  int order() const { return order_; }

 private:
  int order_;
  std::vector<Rational> cells_;
};

Grid multiply(const Grid& a, const Grid& b) {
  Grid out(a.order());
  const int order = a.order();
  for (int i1 = 0; i1 <= order; ++i1) {
    for (int j1 = 0; i1 + j1 <= order; ++j1) {
      if (a.at(i1, j1) == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= order; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= order; ++j2) {
          if (b.at(i2, j2) == 0) continue;
          out.at(i1 + i2, j1 + j2) += a.at(i1, j1) * b.at(i2, j2);
        }
      }
    }
  }
  return out;
}

}  // namespace

BivariateSeries dijkgraaf_two_point_series(int max_total_degree) {
  if (max_total_degree < 0) throw std::domain_error("negative truncation degree");
  const int order = max_total_degree + 1;  // numerator degree before the division

  // exp((x^3 + y^3)/24) = sum x^{3u} y^{3v} / (24^{u+v} u! v!)
  Grid exp_part(order);
  for (int u = 0; 3 * u <= order; ++u) {
    for (int v = 0; 3 * (u + v) <= order; ++v) {
      exp_part.at(3 * u, 3 * v) = make_rational(
          1, pow_integer(24, static_cast<unsigned long>(u + v)) *
                 factorial(static_cast<unsigned long>(u)) *
                 factorial(static_cast<unsigned long>(v)));
    }
  }

  // sum_k k!/(2k+1)! (xy(x+y)/2)^k = sum_k k!/(2k+1)!/2^k sum_t C(k,t) x^{k+t} y^{2k-t}
  Grid ksum(order);
  for (int k = 0; 3 * k <= order; ++k) {
    const Rational scale = make_rational(
        factorial(static_cast<unsigned long>(k)),
        factorial(static_cast<unsigned long>(2 * k + 1)) *
            pow_integer(2, static_cast<unsigned long>(k)));
    for (int t = 0; t <= k; ++t) {
      ksum.at(k + t, 2 * k - t) +=
          scale * binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(t));
    }
  }

  Grid numerator = multiply(exp_part, ksum);

  // The constant term 1 is exactly the unstable 1/(x+y) piece; what
  // remains must divide by (x+y) with zero remainder on every diagonal.
  if (numerator.at(0, 0) != 1) {
    throw std::logic_error("two-point numerator has constant term != 1");
  }
  numerator.at(0, 0) = 0;

  Grid quotient(order);
  for (int deg = 1; deg <= order; ++deg) {
    // e_{i,j} on the diagonal i+j = deg satisfies e = q_{i-1,j} + q_{i,j-1}
    Rational carry(0);  // q_{i, deg-1-i} as i descends
    for (int i = deg - 1; i >= 0; --i) {
      carry = numerator.at(i + 1, deg - 1 - i) - carry;
      quotient.at(i, deg - 1 - i) = carry;
    }
    if (numerator.at(0, deg) != carry) {
      throw std::logic_error("two-point numerator not divisible by (x+y) at degree " +
                             std::to_string(deg));
    }
  }

  std::map<std::pair<int, int>, Rational> coefficients;
  for (int i = 0; i <= max_total_degree; ++i) {
    for (int j = 0; i + j <= max_total_degree; ++j) {
      if (quotient.at(i, j) != 0) coefficients.emplace(std::make_pair(i, j), quotient.at(i, j));
    }
  }
  return BivariateSeries(std::move(coefficients), max_total_degree);
}

Rational two_point_coefficient_formula(int g, int d) {
  if (g < 1 || d < 0 || d > 3 * g - 1) {
    throw std::domain_error("two-point coefficient needs g >= 1 and 0 <= d <= 3g-1");
  }

  Rational total(0);
  for (int i = 0; i <= g; ++i) {
    const int reach = d - 3 * i;
    const int lo = std::max((reach + 2) / 2, 1);  // ceil((d - 3i + 1)/2)
    const int hi = std::min(g - i, reach);
    for (int k = lo; k <= hi; ++k) {
      Integer num = binomial(static_cast<unsigned long>(g - k), static_cast<unsigned long>(i)) *
                    binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(reach - k)) *
                    factorial(static_cast<unsigned long>(k));
      Integer den = factorial(static_cast<unsigned long>(g - k)) *
                    pow_integer(24, static_cast<unsigned long>(g - k)) *
                    factorial(static_cast<unsigned long>(2 * k + 1)) *
                    pow_integer(2, static_cast<unsigned long>(k));
      total += make_rational(std::move(num), std::move(den));
    }
  }

  Integer tail_num = binomial(static_cast<unsigned long>(g - 1), static_cast<unsigned long>(d / 3));
  if (d % 3 == 1) tail_num = -tail_num;
  total += make_rational(std::move(tail_num),
                         factorial(static_cast<unsigned long>(g)) *
                             pow_integer(24, static_cast<unsigned long>(g)));
  return total;
}

Rational faber_three_point_special(int g, int b) {
  if (g < 1 || b < 0) throw std::domain_error("special 3-point coefficient needs g >= 1, b >= 0");
  Rational total(0);
  for (int a = 0; a <= b && a + b <= g; ++a) {
    const int c = g - b - a;
    Integer den = pow_integer(4, static_cast<unsigned long>(a + b)) *
                  pow_integer(24, static_cast<unsigned long>(c)) *
                  odd_double_factorial(2L * (a + b) + 1) *
                  factorial(static_cast<unsigned long>(b - a)) *
                  factorial(static_cast<unsigned long>(2 * a + 1)) *
                  factorial(static_cast<unsigned long>(c));
    total += make_rational(factorial(static_cast<unsigned long>(a + b)), std::move(den));
  }
  return total;
}

VerificationReport crosscheck_two_point(const TauEvaluator& evaluator, int g_max) {
  VerificationReport report;
  report.claim = "two-point-crosscheck";
  const BivariateSeries series = dijkgraaf_two_point_series(3 * g_max + 1);
  for (int g = 1; g <= g_max; ++g) {
    for (int d = 0; d <= 3 * g - 1; ++d) {
      const std::string instance = "g=" + std::to_string(g) + " d=" + std::to_string(d);
      const Rational from_series = series.coefficient(d, 3 * g - 1 - d);
      const Rational from_formula = two_point_coefficient_formula(g, d);
      const Rational from_dvv = evaluator.intersection(
          normalize(g, {d, 3 * g - 1 - d}));
      report.record(from_series == from_formula, instance + " (formula)",
                    rational_str(from_series), rational_str(from_formula));
      report.record(from_series == from_dvv, instance + " (evaluator)",
                    rational_str(from_series), rational_str(from_dvv));
    }
  }
  return report;
}

VerificationReport verify_faber_identity(const TauEvaluator& evaluator, int g_max) {
  VerificationReport report;
  report.claim = "faber-three-point-identity";
  for (int g = 1; g <= g_max; ++g) {
    for (int b = 0; b <= g; ++b) {
      Rational alternating(0);
      for (int j = 0; j <= 2 * b; ++j) {
        const Rational value =
            evaluator.intersection(normalize(g, {3 * g - 2 * b, j, 2 * b - j}));
        if (j % 2 == 0) {
          alternating += value;
        } else {
          alternating -= value;
        }
      }
      const Rational closed = faber_three_point_special(g, b);
      report.record(closed == alternating,
                    "g=" + std::to_string(g) + " b=" + std::to_string(b),
                    rational_str(closed), rational_str(alternating));
    }
  }
  return report;
}

}  // namespace wk
