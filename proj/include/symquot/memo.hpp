#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace symquot::detail {

/// Thread-safe memo table. Concurrent writers may race to insert the same
/// key; the values are equal by construction, so the first one wins.
template <class Key, class Value, class Compare = std::less<>>
class MemoTable {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return *std::move(hit);
    // Computed outside the lock: compute() may recurse into this table.
    Value v = compute();
    return insert(key, std::move(v));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> table_;
};

}  // namespace symquot::detail
