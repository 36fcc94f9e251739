#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wk/memo_table.hpp"
#include "wk/rational.hpp"
#include "wk/tau_spec.hpp"

namespace wk {

// <tau_{d1}...tau_{dn}>_0 = (n-3)! / (d1! ... dn!). Requires n >= 3 and
// sum d_i = n - 3.
Rational genus0_closed_form(const std::vector<int>& exponents);

// String equation: drop one tau_0, return one subspec per remaining
// positive exponent with that exponent lowered (tau_{-1} terms vanish and
// are omitted). value(spec) = sum of values of the result. Requires a zero
// exponent and n >= 2.
std::vector<TauSpec> string_reduce(const TauSpec& spec);

// Dilaton equation: drop one tau_1; value(spec) = factor * value(subspec)
// with factor = 2g - 2 + n counting the points that remain. Requires a
// 1-exponent and a stable remainder.
std::pair<Rational, TauSpec> dilaton_reduce(const TauSpec& spec);

struct DvvTerm {
  Rational coefficient;
  TauSpec spec;
};

// One application of the KdV recursion at a chosen pivot exponent.
// Invariant: sum of coefficient * value(spec) over terms equals the value
// of the expanded spec. Separating terms are products of two correlators;
// the factor carrying tau_r is evaluated and folded into the coefficient,
// so each term holds a single spec. Unstable subterms are omitted.
struct DvvExpansion {
  std::vector<DvvTerm> terms;
  std::size_t pivot = 0;
};

struct EvalOptions {
  bool use_string = true;   // apply the string equation when a tau_0 exists
  bool use_dilaton = true;  // apply the dilaton equation when a tau_1 exists
};

// Exact evaluation of psi-class intersection numbers with a shared memo
// table. Pure: the value depends only on the spec, never on the reduction
// strategy or evaluation schedule (tested properties).
class TauEvaluator {
 public:
  explicit TauEvaluator(EvalOptions options = {});

  // Throws std::domain_error unless spec is stable and dimension-valid.
  Rational intersection(const TauSpec& spec) const;

  // Expands spec at the given pivot (exponent must be >= 1; it plays the
  // role of k+1 in the recursion).
  DvvExpansion dvv_expand(const TauSpec& spec, std::size_t pivot) const;

  MemoTable& memo() const { return memo_; }

 private:
  Rational eval(const TauSpec& spec) const;
  Rational compute(const TauSpec& spec) const;

  EvalOptions options_;
  mutable MemoTable memo_;
};

// Process-wide evaluator with the default strategy; safe for concurrent use.
TauEvaluator& default_evaluator();

// intersection() on the default evaluator.
Rational intersection(const TauSpec& spec);

}  // namespace wk
