#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polardet {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(uint64_t limit)
      : std::runtime_error("determinant evaluation budget exceeded (limit " +
                           std::to_string(limit) + ")") {}
};

// Counts elementary determinant evaluations. Exhaustion is an explicit error
// (or a false return for callers that resume from a watermark instead).
class Budget {
 public:
  static constexpr uint64_t kDefaultMaxEvals = 100'000'000;

  explicit Budget(uint64_t max_evals = kDefaultMaxEvals) : limit_(max_evals) {}

  void spend(uint64_t n = 1) {
    if (!try_spend(n)) throw BudgetExceeded(limit_);
  }

  bool try_spend(uint64_t n = 1) {
    if (used_ + n > limit_) return false;
    used_ += n;
    return true;
  }

  uint64_t used() const { return used_; }
  uint64_t limit() const { return limit_; }

 private:
  uint64_t limit_;
  uint64_t used_ = 0;
};

}  // namespace polardet
