#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twoabs {

using Index = std::uint32_t;

enum class ErrorKind {
  InvalidSize,
  BadElement,
  NotAnIdeal,
  NotProper,
  ZeroIdealRejected,
  NotAHom,
  NotASubmodule,
  BudgetExceeded,
  EmptySubset,
  NotAChain,
  UnionNotProper,
  IncompatibleHom,
  IMNotInF,
  SNotMultClosed,
  InvalidStructure,
  UnknownStatement,
  NoValidInstance,
  ParseError,
  ValidationError,
  UnknownCommand,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::BadElement: return "BadElement";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::ZeroIdealRejected: return "ZeroIdealRejected";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotASubmodule: return "NotASubmodule";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::UnionNotProper: return "UnionNotProper";
    case ErrorKind::IncompatibleHom: return "IncompatibleHom";
    case ErrorKind::IMNotInF: return "IMNotInF";
    case ErrorKind::SNotMultClosed: return "SNotMultClosed";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::UnknownStatement: return "UnknownStatement";
    case ErrorKind::NoValidInstance: return "NoValidInstance";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

/// One labelled carrier index inside a witness tuple, e.g. {"a", 2}.
struct WitnessEntry {
  std::string role;
  Index index = 0;
  std::string name;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

using Witness = std::vector<WitnessEntry>;

/// Every failure raised by the library. The kind is stable and is what tests
/// and the CLI dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, Witness witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  Witness witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, Witness witness = {}) {
  throw Error(kind, message, std::move(witness));
}

}  // namespace twoabs
