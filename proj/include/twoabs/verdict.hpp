#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "twoabs/error.hpp"

namespace twoabs {

/// Outcome of a decision procedure. When `holds` is false the witness is the
/// lexicographically least violating tuple in loop order.
struct Verdict {
  bool holds = true;
  Witness witness;
  std::uint64_t iterations = 0;

  explicit operator bool() const noexcept { return holds; }

  static Verdict yes(std::uint64_t iterations = 0) { return Verdict{true, {}, iterations}; }
  static Verdict no(Witness w, std::uint64_t iterations = 0) {
    return Verdict{false, std::move(w), iterations};
  }

  /// Index of the witness entry with the given role; throws if absent.
  Index at(const std::string& role) const {
    for (const auto& e : witness)
      if (e.role == role) return e.index;
    fail(ErrorKind::BadElement, "verdict has no witness role '" + role + "'");
  }
};

}  // namespace twoabs
