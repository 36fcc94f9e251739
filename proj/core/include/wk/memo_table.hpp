#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "wk/rational.hpp"
#include "wk/tau_spec.hpp"

namespace wk {

// Canonical spec -> exact value. Concurrent readers with serialized
// insertion; a value stored for a key never changes, and racing
// computations of the same key are harmless (both produce the identical
// rational, first insert wins).
class MemoTable {
 public:
  std::optional<Rational> find(const TauSpec& spec) const;

  // Returns the stored value (the existing one if another thread won).
  Rational insert(const TauSpec& spec, Rational value);

  std::size_t size() const;
  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }

  void clear();

  // Visits every entry. Not synchronized against concurrent insertion;
  // call when no evaluation is in flight.
  void for_each(const std::function<void(const TauSpec&, const Rational&)>& fn) const;

 private:
  static constexpr std::size_t kShards = 64;

  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<TauSpec, Rational, TauSpecHash> entries;
  };

  Shard& shard_for(const TauSpec& spec) const;

  mutable std::array<Shard, kShards> shards_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

}  // namespace wk
