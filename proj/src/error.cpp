#include "gsmloc/error.hpp"

namespace gsmloc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateCell: return "DuplicateCell";
    case ErrorCode::OrphanLa: return "OrphanLa";
    case ErrorCode::ConflictingLa: return "ConflictingLa";
    case ErrorCode::EmptyTopology: return "EmptyTopology";
    case ErrorCode::UnknownImsi: return "UnknownImsi";
    case ErrorCode::UnknownCell: return "UnknownCell";
    case ErrorCode::UnknownLa: return "UnknownLa";
    case ErrorCode::LaMismatch: return "LaMismatch";
    case ErrorCode::CalleeDetached: return "CalleeDetached";
    case ErrorCode::CallerDetached: return "CallerDetached";
    case ErrorCode::NotRegisteredHere: return "NotRegisteredHere";
    case ErrorCode::NoBranchMatches: return "NoBranchMatches";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::DayOutOfWindow: return "DayOutOfWindow";
    case ErrorCode::TraceOutOfOrder: return "TraceOutOfOrder";
    case ErrorCode::UnresolvableId: return "UnresolvableId";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Io: return "Io";
    case ErrorCode::DominanceViolated: return "DominanceViolated";
  }
  return "Unknown";
}

}  // namespace gsmloc
