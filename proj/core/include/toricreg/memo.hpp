#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace toricreg {

/// Entry limit shared by the process-wide caches. Reads TORICREG_CACHE_SIZE
/// once; 0 disables the limit.
inline std::size_t cache_capacity() {
  static const std::size_t capacity = [] {
    if (const char* env = std::getenv("TORICREG_CACHE_SIZE")) {
      try {
        return static_cast<std::size_t>(std::stoull(env));
      } catch (...) {
      }
    }
    return std::size_t{4096};
  }();
  return capacity;
}

/// Thread-safe get-or-compute map. The first caller for a key computes the
/// value outside the lock; concurrent callers for the same key wait on it.
/// When full, the whole table is dropped (values are shared_ptr, so callers
/// holding results are unaffected).
template <typename Key, typename Value>
class MemoCache {
 public:
  using ValuePtr = std::shared_ptr<const Value>;

  ValuePtr get_or_compute(const Key& key, const std::function<Value()>& compute) {
    std::promise<ValuePtr> promise;
    std::shared_future<ValuePtr> future;
    bool owner = false;
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) {
        future = it->second;
      } else {
        const std::size_t cap = cache_capacity();
        if (cap != 0 && table_.size() >= cap) table_.clear();
        future = promise.get_future().share();
        table_.emplace(key, future);
        owner = true;
      }
    }
    if (owner) {
      try {
        promise.set_value(std::make_shared<const Value>(compute()));
      } catch (...) {
        {
          std::lock_guard lock(mutex_);
          table_.erase(key);
        }
        promise.set_exception(std::current_exception());
      }
    }
    return future.get();
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_future<ValuePtr>> table_;
};

}  // namespace toricreg
