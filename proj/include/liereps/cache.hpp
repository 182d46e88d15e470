#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace liereps {

// Shared memo table. Readers are synchronized; a value may be computed twice
// under contention but the first inserted copy wins, so results are stable.
template <class K, class V>
class Memo {
  public:
    template <class F>
    std::shared_ptr<const V> get_or_compute(const K& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        auto value = std::make_shared<const V>(compute());
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = table_.emplace(key, value);
        return it->second;
    }

  private:
    std::mutex mu_;
    std::map<K, std::shared_ptr<const V>> table_;
};

}  // namespace liereps
