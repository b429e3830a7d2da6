#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsmloc {

enum class ErrorCode {
  DuplicateCell,
  OrphanLa,
  ConflictingLa,
  EmptyTopology,
  UnknownImsi,
  UnknownCell,
  UnknownLa,
  LaMismatch,
  CalleeDetached,
  CallerDetached,
  NotRegisteredHere,
  NoBranchMatches,
  EmptyInput,
  EmptyWindow,
  DayOutOfWindow,
  TraceOutOfOrder,
  UnresolvableId,
  Parse,
  Config,
  Io,
  DominanceViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every domain failure in the library is reported as an Error carrying a
/// machine-readable code; what() holds the human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Usage and configuration problems map to a different process exit status
/// than runtime failures.
constexpr bool is_usage_error(ErrorCode code) noexcept {
  return code == ErrorCode::Config;
}

}  // namespace gsmloc
