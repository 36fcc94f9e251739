#include "wk/kappa.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wk {

long KappaSpec::degree() const {
  return std::accumulate(indices.begin(), indices.end(), 0L);
}

bool KappaSpec::dimension_valid() const {
  if (genus < 2 || indices.empty()) return false;
  for (int a : indices) {
    if (a < 1) return false;
  }
  return degree() == 3L * genus - 3;
}

bool KappaSpec::operator<(const KappaSpec& other) const {
  if (genus != other.genus) return genus < other.genus;
  return indices < other.indices;
}

KappaSpec normalize_kappa(int genus, std::vector<int> indices) {
  if (genus < 0) throw std::domain_error("negative genus");
  for (int a : indices) {
    if (a < 1) throw std::domain_error("kappa index must be >= 1");
  }
  std::sort(indices.begin(), indices.end());
  return KappaSpec{genus, std::move(indices)};
}

namespace {

// Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
void partitions_rec(int m, int i, int next_block, std::vector<int>& assign,
                    std::vector<SetPartition>& out) {
  if (i == m) {
    SetPartition partition(next_block);
    for (int t = 0; t < m; ++t) partition[assign[t]].push_back(t);
    out.push_back(std::move(partition));
    return;
  }
  for (int b = 0; b < next_block; ++b) {
    assign[i] = b;
    partitions_rec(m, i + 1, next_block, assign, out);
  }
  assign[i] = next_block;
  partitions_rec(m, i + 1, next_block + 1, assign, out);
}

}  // namespace

std::vector<SetPartition> set_partitions(int m) {
  if (m < 1) throw std::domain_error("set partitions need m >= 1");
  std::vector<SetPartition> out;
  std::vector<int> assign(m, 0);
  partitions_rec(m, 1, 1, assign, out);
  return out;
}

Integer partition_permutation_count(const SetPartition& partition) {
  Integer count(1);
  for (const auto& block : partition) {
    count *= factorial(static_cast<unsigned long>(block.size() - 1));
  }
  return count;
}

namespace {

KappaSpec merge_blocks(const KappaSpec& spec, const SetPartition& partition) {
  std::vector<int> merged;
  merged.reserve(partition.size());
  for (const auto& block : partition) {
    int sum = 0;
    for (int i : block) sum += spec.indices[i];
    merged.push_back(sum);
  }
  std::sort(merged.begin(), merged.end());
  return KappaSpec{spec.genus, std::move(merged)};
}

}  // namespace

Rational KappaEvaluator::psi_side(const KappaSpec& spec) const {
  std::vector<int> exponents(spec.indices);
  for (int& d : exponents) d += 1;
  return tau_.intersection(TauSpec{spec.genus, std::move(exponents)});
}

Rational KappaEvaluator::kappa_integral(const KappaSpec& spec) const {
  if (!spec.dimension_valid()) {
    throw std::domain_error("kappa spec must have g >= 2, indices >= 1, sum a_i = 3g-3");
  }
  KappaSpec canonical = spec;
  std::sort(canonical.indices.begin(), canonical.indices.end());
  return eval(canonical);
}

Rational KappaEvaluator::eval(const KappaSpec& spec) const {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(spec);
    if (it != memo_.end()) return it->second;
  }

  // K(a) = <prod tau_{a_i+1}> minus the contributions of every coarser
  // cycle type; each such type has strictly fewer indices, so the
  // recursion terminates.
  Rational value = psi_side(spec);
  const int m = static_cast<int>(spec.count());
  if (m > 1) {
    for (const SetPartition& partition : set_partitions(m)) {
      if (partition.size() == static_cast<std::size_t>(m)) continue;  // finest
      value -= Rational(partition_permutation_count(partition)) *
               eval(merge_blocks(spec, partition));
    }
  }

  std::lock_guard lock(mutex_);
  return memo_.emplace(spec, std::move(value)).first->second;
}

Rational KappaEvaluator::psi_from_kappa_identity(int g,
                                                 const std::vector<int>& indices) const {
  const KappaSpec spec = normalize_kappa(g, indices);
  if (!spec.dimension_valid()) {
    throw std::domain_error("kappa spec must have g >= 2, indices >= 1, sum a_i = 3g-3");
  }
  Rational total(0);
  for (const SetPartition& partition : set_partitions(static_cast<int>(spec.count()))) {
    total += Rational(partition_permutation_count(partition)) *
             eval(merge_blocks(spec, partition));
  }
  return total;
}

KappaEvaluator& default_kappa_evaluator() {
  static KappaEvaluator evaluator(default_evaluator());
  return evaluator;
}

}  // namespace wk
