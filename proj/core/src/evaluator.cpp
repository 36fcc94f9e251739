#include "wk/evaluator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wk {

Rational genus0_closed_form(const std::vector<int>& exponents) {
  const auto n = static_cast<long>(exponents.size());
  long sum = 0;
  for (int d : exponents) {
    if (d < 0) throw std::domain_error("negative psi exponent");
    sum += d;
  }
  if (n < 3 || sum != n - 3) {
    throw std::domain_error("genus-0 closed form needs n >= 3 and sum d_i = n - 3");
  }
  Integer den(1);
  for (int d : exponents) den *= factorial(static_cast<unsigned long>(d));
  return make_rational(factorial(static_cast<unsigned long>(n - 3)), std::move(den));
}

std::vector<TauSpec> string_reduce(const TauSpec& spec) {
  auto zero = std::find(spec.exponents.begin(), spec.exponents.end(), 0);
  if (zero == spec.exponents.end() || spec.points() < 2) {
    throw std::domain_error("string equation needs a tau_0 and n >= 2");
  }
  std::vector<int> rest;
  rest.reserve(spec.points() - 1);
  rest.insert(rest.end(), spec.exponents.begin(), zero);
  rest.insert(rest.end(), zero + 1, spec.exponents.end());

  std::vector<TauSpec> out;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j] == 0) continue;  // tau_{-1} vanishes
    std::vector<int> child = rest;
    child[j] -= 1;
    std::sort(child.begin(), child.end());
    out.push_back(TauSpec{spec.genus, std::move(child)});
  }
  return out;
}

std::pair<Rational, TauSpec> dilaton_reduce(const TauSpec& spec) {
  auto one = std::find(spec.exponents.begin(), spec.exponents.end(), 1);
  if (one == spec.exponents.end()) {
    throw std::domain_error("dilaton equation needs a tau_1");
  }
  std::vector<int> rest;
  rest.reserve(spec.points() - 1);
  rest.insert(rest.end(), spec.exponents.begin(), one);
  rest.insert(rest.end(), one + 1, spec.exponents.end());
  TauSpec sub{spec.genus, std::move(rest)};
  if (!sub.stable()) {
    throw std::domain_error("dilaton remainder is unstable for " + spec_str(spec));
  }
  const long factor = 2L * spec.genus - 2 + static_cast<long>(sub.points());
  return {Rational(factor), std::move(sub)};
}

namespace {

// Distinct values of a sorted exponent list with their multiplicities.
struct ValueCounts {
  std::vector<int> values;
  std::vector<int> counts;
};

ValueCounts count_values(const std::vector<int>& sorted) {
  ValueCounts vc;
  for (int v : sorted) {
    if (!vc.values.empty() && vc.values.back() == v) {
      ++vc.counts.back();
    } else {
      vc.values.push_back(v);
      vc.counts.push_back(1);
    }
  }
  return vc;
}

}  // namespace

DvvExpansion TauEvaluator::dvv_expand(const TauSpec& spec, std::size_t pivot) const {
  if (!spec.dimension_valid()) {
    throw std::domain_error("dvv expansion needs a stable dimension-valid spec, got " +
                            spec_str(spec));
  }
  if (pivot >= spec.points() || spec.exponents[pivot] < 1) {
    throw std::domain_error("dvv pivot exponent must be >= 1");
  }

  const int g = spec.genus;
  const long k = spec.exponents[pivot] - 1;
  std::vector<int> rest;
  rest.reserve(spec.points() - 1);
  for (std::size_t i = 0; i < spec.points(); ++i) {
    if (i != pivot) rest.push_back(spec.exponents[i]);
  }
  const std::size_t n = rest.size();
  const Integer& norm = odd_double_factorial(2 * k + 3);

  DvvExpansion out;
  out.pivot = pivot;

  // Contact terms: the pivot merges into one remaining insertion,
  // tau_{d_j} -> tau_{d_j + k}.
  for (std::size_t j = 0; j < n; ++j) {
    const long dj = rest[j];
    Rational coeff = make_rational(odd_double_factorial(2 * k + 2 * dj + 1),
                                   odd_double_factorial(2 * dj - 1) * norm);
    std::vector<int> child = rest;
    child[j] += static_cast<int>(k);
    std::sort(child.begin(), child.end());
    TauSpec cs{g, std::move(child)};
    if (cs.stable()) out.terms.push_back({std::move(coeff), std::move(cs)});
  }

  if (k >= 1 && g >= 1) {
    // Non-separating terms: genus drops by one, tau_r tau_s appear.
    for (long r = 0; r <= k - 1; ++r) {
      const long s = k - 1 - r;
      Rational coeff = make_rational(
          odd_double_factorial(2 * r + 1) * odd_double_factorial(2 * s + 1),
          2 * norm);
      std::vector<int> child = rest;
      child.push_back(static_cast<int>(r));
      child.push_back(static_cast<int>(s));
      std::sort(child.begin(), child.end());
      TauSpec cs{g - 1, std::move(child)};
      if (cs.stable()) out.terms.push_back({std::move(coeff), std::move(cs)});
    }
  }

  if (k >= 1) {
    // Separating terms: the remaining insertions split over two factors.
    // Subsets are enumerated as sub-multisets (picks per distinct value)
    // with binomial multiplicity; correlators only see the multiset. The
    // genus g' of the tau_r factor is forced by its dimension constraint;
    // splits with no admissible g' contribute zero and are skipped. The
    // tau_r factor's value folds into the coefficient.
    const ValueCounts vc = count_values(rest);
    const std::size_t distinct = vc.values.size();
    std::vector<int> picks(distinct, 0);

    for (;;) {
      long sum_i = 0;
      long size_i = 0;
      Integer mult(1);
      for (std::size_t t = 0; t < distinct; ++t) {
        sum_i += static_cast<long>(picks[t]) * vc.values[t];
        size_i += picks[t];
        mult *= binomial(static_cast<unsigned long>(vc.counts[t]),
                         static_cast<unsigned long>(picks[t]));
      }

      for (long r = 0; r <= k - 1; ++r) {
        const long s = k - 1 - r;
        // dimension constraint of the tau_r factor: r + sum_i = 3g' - 3 + size_i + 1
        const long three_gp = r + sum_i - size_i + 2;
        if (three_gp < 0 || three_gp % 3 != 0) continue;
        const long gp = three_gp / 3;
        if (gp > g) continue;

        std::vector<int> left;
        left.reserve(size_i + 1);
        left.push_back(static_cast<int>(r));
        std::vector<int> right;
        right.reserve(n - size_i + 1);
        right.push_back(static_cast<int>(s));
        for (std::size_t t = 0; t < distinct; ++t) {
          left.insert(left.end(), picks[t], vc.values[t]);
          right.insert(right.end(), vc.counts[t] - picks[t], vc.values[t]);
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        TauSpec ls{static_cast<int>(gp), std::move(left)};
        TauSpec rs{g - static_cast<int>(gp), std::move(right)};
        if (!ls.stable() || !rs.dimension_valid()) continue;

        Rational coeff = make_rational(
            mult * odd_double_factorial(2 * r + 1) * odd_double_factorial(2 * s + 1),
            2 * norm);
        coeff *= eval(ls);
        if (coeff != 0) out.terms.push_back({std::move(coeff), std::move(rs)});
      }

      // next pick vector
      std::size_t t = 0;
      while (t < distinct && picks[t] == vc.counts[t]) picks[t++] = 0;
      if (t == distinct) break;
      ++picks[t];
    }
  }

  return out;
}

TauEvaluator::TauEvaluator(EvalOptions options) : options_(options) {}

Rational TauEvaluator::intersection(const TauSpec& spec) const {
  if (!spec.dimension_valid()) {
    throw std::domain_error("spec is unstable or dimension-invalid: " + spec_str(spec));
  }
  if (!std::is_sorted(spec.exponents.begin(), spec.exponents.end())) {
    return eval(normalize(spec.genus, spec.exponents));  // memo keys stay canonical
  }
  return eval(spec);
}

Rational TauEvaluator::eval(const TauSpec& spec) const {
  if (auto hit = memo_.find(spec)) return *std::move(hit);
  return memo_.insert(spec, compute(spec));
}

Rational TauEvaluator::compute(const TauSpec& spec) const {
  const auto& d = spec.exponents;

  if (spec.genus == 0) return genus0_closed_form(d);

  // <tau_1>_1 = 1/24 seeds the recursion: with one point all three DVV
  // sums are empty.
  if (spec.genus == 1 && d.size() == 1 && d[0] == 1) return make_rational(1, 24);

  if (options_.use_string && d.size() >= 2 && d.front() == 0) {
    Rational sum(0);
    for (const TauSpec& child : string_reduce(spec)) sum += eval(child);
    return sum;
  }

  if (options_.use_dilaton &&
      std::find(d.begin(), d.end(), 1) != d.end() &&
      2L * spec.genus - 2 + static_cast<long>(d.size()) - 1 >= 1) {
    auto [factor, sub] = dilaton_reduce(spec);
    return factor * eval(sub);
  }

  // Pivot on the largest exponent (last in canonical order); it is >= 1
  // for every dimension-valid spec of positive genus.
  DvvExpansion expansion = dvv_expand(spec, d.size() - 1);
  Rational sum(0);
  for (const DvvTerm& term : expansion.terms) {
    sum += term.coefficient * eval(term.spec);
  }
  return sum;
}

TauEvaluator& default_evaluator() {
  static TauEvaluator evaluator;
  return evaluator;
}

Rational intersection(const TauSpec& spec) {
  return default_evaluator().intersection(spec);
}

}  // namespace wk
