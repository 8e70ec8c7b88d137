#pragma once

// Shared helper for kernels that need the smallest failing index of a
// parallel sweep (exceptions must not cross an OpenMP region, so failures
// are recorded and rethrown by the caller).

#include <atomic>
#include <cstdint>

namespace tc::detail {

class MinIndex {
 public:
  void record(std::int64_t i) {
    std::int64_t cur = best_.load(std::memory_order_relaxed);
    while (i < cur &&
           !best_.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
    }
  }
  bool hit() const { return best_.load(std::memory_order_relaxed) != kNone; }
  std::int64_t value() const { return best_.load(std::memory_order_relaxed); }

 private:
  static constexpr std::int64_t kNone = INT64_MAX;
  std::atomic<std::int64_t> best_{kNone};
};

}  // namespace tc::detail
