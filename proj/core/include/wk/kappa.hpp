#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "wk/evaluator.hpp"
#include "wk/rational.hpp"

namespace wk {

// Genus plus the multiset of kappa indices, stored non-decreasing; all
// indices >= 1. Dimension-valid iff sum a_i = 3g - 3.
struct KappaSpec {
  int genus = 0;
  std::vector<int> indices;

  std::size_t count() const { return indices.size(); }
  long degree() const;
  bool dimension_valid() const;
  bool operator<(const KappaSpec& other) const;
  bool operator==(const KappaSpec&) const = default;
};

KappaSpec normalize_kappa(int genus, std::vector<int> indices);

// Blocks of {0, ..., m-1}, pairwise disjoint, covering everything.
using SetPartition = std::vector<std::vector<int>>;

// Every set partition of {0,...,m-1} exactly once; B(m) of them.
std::vector<SetPartition> set_partitions(int m);

// Number of permutations whose cycle supports are exactly the blocks:
// prod (|B| - 1)!.
Integer partition_permutation_count(const SetPartition& partition);

// Pure kappa-class integrals over the unpointed moduli space, obtained by
// triangular inversion of the pushforward identity that expands
// psi^{a_1+1}...psi^{a_m+1} pushforwards into kappa monomials indexed by
// permutation cycle types.
class KappaEvaluator {
 public:
  explicit KappaEvaluator(const TauEvaluator& tau) : tau_(tau) {}

  // integral of kappa_{a_1}...kappa_{a_m}; throws std::domain_error unless
  // the spec is dimension-valid with all indices >= 1 and g >= 2.
  Rational kappa_integral(const KappaSpec& spec) const;

  // Evaluates sum over set partitions P of [prod_B (|B|-1)!] *
  // kappa_integral(merged indices of P); equals the psi-side integral
  // <tau_{a_1+1}...tau_{a_m+1}>_g. Tests the inversion bookkeeping.
  Rational psi_from_kappa_identity(int g, const std::vector<int>& indices) const;

  const TauEvaluator& tau() const { return tau_; }

 private:
  Rational eval(const KappaSpec& spec) const;
  Rational psi_side(const KappaSpec& spec) const;

  const TauEvaluator& tau_;
  mutable std::mutex mutex_;
  mutable std::map<KappaSpec, Rational> memo_;
};

KappaEvaluator& default_kappa_evaluator();

}  // namespace wk
