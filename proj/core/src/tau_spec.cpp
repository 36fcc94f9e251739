#include "wk/tau_spec.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace wk {

long TauSpec::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0L);
}

bool TauSpec::stable() const {
  return 2L * genus - 2 + static_cast<long>(points()) >= 1;
}

bool TauSpec::dimension_valid() const {
  return stable() && degree() == 3L * genus - 3 + static_cast<long>(points());
}

TauSpec normalize(int genus, std::vector<int> exponents) {
  if (genus < 0) throw std::domain_error("negative genus");
  for (int d : exponents) {
    if (d < 0) throw std::domain_error("negative psi exponent");
  }
  std::sort(exponents.begin(), exponents.end());
  return TauSpec{genus, std::move(exponents)};
}

std::size_t TauSpecHash::operator()(const TauSpec& spec) const noexcept {
  // FNV-1a over genus then exponents
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(spec.genus));
  for (int d : spec.exponents) mix(static_cast<std::uint64_t>(d) + 0x9e3779b97f4a7c15ull);
  return static_cast<std::size_t>(h);
}

namespace {

void tuples_rec(long sum, int parts, int min_value,
                std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (sum == 0) out.push_back(prefix);
    return;
  }
  if (parts == 1) {
    if (sum >= min_value) {
      prefix.push_back(static_cast<int>(sum));
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // remaining parts are >= v, so v can be at most sum/parts
  for (long v = min_value; v * parts <= sum; ++v) {
    prefix.push_back(static_cast<int>(v));
    tuples_rec(sum - v, parts - 1, static_cast<int>(v), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> sorted_tuples(long sum, int parts, int min_value) {
  std::vector<std::vector<int>> out;
  if (parts < 0 || sum < 0 || min_value < 0) return out;
  std::vector<int> prefix;
  prefix.reserve(parts);
  tuples_rec(sum, parts, min_value, prefix, out);
  return out;
}

std::vector<TauSpec> enumerate_specs(int g, int n, int min_exponent) {
  if (2L * g - 2 + n < 1) throw std::domain_error("unstable (g, n)");
  const long sum = 3L * g - 3 + n;
  std::vector<TauSpec> out;
  for (auto& tuple : sorted_tuples(sum, n, min_exponent)) {
    out.push_back(TauSpec{g, std::move(tuple)});
  }
  return out;
}

std::string spec_str(const TauSpec& spec) {
  std::string s = "g=" + std::to_string(spec.genus) + " d=[";
  for (std::size_t i = 0; i < spec.exponents.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(spec.exponents[i]);
  }
  s += ']';
  return s;
}

}  // namespace wk
