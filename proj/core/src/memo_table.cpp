#include "wk/memo_table.hpp"

#include <mutex>
#include <utility>

namespace wk {

MemoTable::Shard& MemoTable::shard_for(const TauSpec& spec) const {
  return shards_[TauSpecHash{}(spec) % kShards];
}

std::optional<Rational> MemoTable::find(const TauSpec& spec) const {
  Shard& shard = shard_for(spec);
  std::shared_lock lock(shard.mutex);
  auto it = shard.entries.find(spec);
  if (it == shard.entries.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

Rational MemoTable::insert(const TauSpec& spec, Rational value) {
  Shard& shard = shard_for(spec);
  std::unique_lock lock(shard.mutex);
  auto [it, fresh] = shard.entries.emplace(spec, std::move(value));
  (void)fresh;
  return it->second;
}

std::size_t MemoTable::size() const {
  std::size_t total = 0;
  for (auto& shard : shards_) {
    std::shared_lock lock(shard.mutex);
    total += shard.entries.size();
  }
  return total;
}

void MemoTable::clear() {
  for (auto& shard : shards_) {
    std::unique_lock lock(shard.mutex);
    shard.entries.clear();
  }
  hits_.store(0, std::memory_order_relaxed);
  misses_.store(0, std::memory_order_relaxed);
}

void MemoTable::for_each(
    const std::function<void(const TauSpec&, const Rational&)>& fn) const {
  for (auto& shard : shards_) {
    std::shared_lock lock(shard.mutex);
    for (auto& [spec, value] : shard.entries) fn(spec, value);
  }
}

}  // namespace wk
