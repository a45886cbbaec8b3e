#pragma once

// Per-ring memo for derived data that is expensive to recompute (ideal
// lattice, maximal ideals, localizations). Keyed by ring identity; entries
// die with their ring.

#include <map>
#include <memory>
#include <mutex>

#include "semireg/ring.hpp"

namespace semireg {

template <class V>
class RingMemo {
 public:
  template <class F>
  std::shared_ptr<const V> get(const RingPtr& r, F&& compute) {
    {
      std::lock_guard lock(mu_);
      auto it = entries_.find(r.get());
      if (it != entries_.end()) {
        if (auto alive = it->second.ring.lock(); alive == r) return it->second.value;
        entries_.erase(it);
      }
    }
    // computed unlocked: compute() may consult other memos
    auto value = std::make_shared<const V>(compute());
    std::lock_guard lock(mu_);
    if (entries_.size() > 4096) {
      for (auto it = entries_.begin(); it != entries_.end();)
        it = it->second.ring.expired() ? entries_.erase(it) : std::next(it);
    }
    entries_[r.get()] = Entry{r, value};
    return value;
  }

 private:
  struct Entry {
    std::weak_ptr<const FiniteRing> ring;
    std::shared_ptr<const V> value;
  };
  std::mutex mu_;
  std::map<const FiniteRing*, Entry> entries_;
};

}  // namespace semireg
