#pragma once

#include <cstdint>
#include <string>

#include "twoabs/error.hpp"

namespace twoabs {

/// Guardrail for exhaustive sweeps. A check whose worst-case primitive
/// iteration count exceeds `limit` is refused unless `force` is set.
struct Budget {
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;

  std::uint64_t limit = kDefaultLimit;
  bool force = false;

  bool allows(std::uint64_t estimate) const noexcept { return force || estimate <= limit; }

  void require(std::uint64_t estimate, const std::string& what) const {
    if (!allows(estimate))
      fail(ErrorKind::BudgetExceeded, what + " needs ~" + std::to_string(estimate) +
                                          " iterations, budget is " + std::to_string(limit));
  }
};

inline std::uint64_t cube(std::uint64_t n) { return n * n * n; }

}  // namespace twoabs
