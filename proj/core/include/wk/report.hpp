#pragma once

#include <string>
#include <vector>

namespace wk {

struct Witness {
  std::string instance;
  std::string expected;
  std::string actual;
};

// Outcome of sweeping one claim over a family of instances. Failures carry
// a witness each; pass is equivalent to an empty witness list.
struct VerificationReport {
  std::string claim;
  long long instances = 0;
  std::vector<Witness> witnesses;

  bool pass() const { return witnesses.empty(); }

  void record(bool ok, std::string instance, std::string expected, std::string actual) {
    ++instances;
    if (!ok) witnesses.push_back({std::move(instance), std::move(expected), std::move(actual)});
  }
};

}  // namespace wk
