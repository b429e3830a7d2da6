#pragma once

#include "gsmloc/protocol.hpp"

namespace gsmloc {

enum class IntelligentOutcome { Tier1Hit, Tier2HitPromoted, MissFullProcedure };

std::string_view to_string(IntelligentOutcome o) noexcept;

struct IntelligentOptions {
  /// A tier-2 hit also asks the HLR for fresh billing/service-validity data.
  bool refresh_billing = false;
  /// Test hook: every registration issues one extra profile request, which
  /// breaks cost dominance on purpose.
  bool corrupt_dominance = false;
};

/// Registration against the two-tier VLR of the MSC owning `new_cell`.
///  - tier-1 hit: only the local check is logged.
///  - live tier-2 entry: the cached profile is promoted; the HLR only sees a
///    pointer update (plus the cancel it sends to the old VLR).
///  - otherwise: the full baseline procedure, and the subscriber is admitted
///    to tier 2.
/// Arrivals from outside the MSC count as visits for the current window day.
/// Throws UnknownImsi, UnknownCell.
IntelligentOutcome intelligent_register(Network& net, const Imsi& imsi, const CellId& new_cell, SimTime now,
                                        MessageLog& log, const IntelligentOptions& options = {});

/// Call delivery that skips the HLR when the calling MSC holds the callee in
/// tier 1 with a live tier-2 entry; everything else goes through
/// deliver_call. Throws as deliver_call.
CallRoute intelligent_deliver(Network& net, const Imsi& caller, const Imsi& callee, SimTime now, MessageLog& log);

}  // namespace gsmloc
