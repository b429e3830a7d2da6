#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gsmloc/error.hpp"
#include "gsmloc/intelligent.hpp"
#include "gsmloc/metrics.hpp"
#include "gsmloc/protocol.hpp"
#include "gsmloc/trace.hpp"

namespace gsmloc {

enum class Scheme { Baseline, Intelligent };

std::string_view to_string(Scheme s) noexcept;
std::optional<Scheme> parse_scheme(std::string_view s);

struct SimOptions {
  TierConfig tier;
  IntelligentOptions intelligent;
  /// Run day-boundary housekeeping at least up to this day; by default the
  /// loop stops at the end of the day holding the last event.
  std::int64_t horizon_days = 0;
};

struct CallRecord {
  std::size_t event_index = 0;
  Imsi caller;
  Imsi callee;
  bool delivered = false;
  std::optional<MscId> called_msc;
  std::optional<ErrorCode> failure;

  friend bool operator==(const CallRecord&, const CallRecord&) = default;
};

struct SimulationResult {
  Metrics metrics;
  MessageLog log;
  std::vector<CallRecord> calls;
};

/// Replays the trace in order through one scheme. Every IMSI mentioned in the
/// trace is provisioned up front. Day boundaries (multiples of 86400 s) run
/// before any event at or after them. Moves and calls by detached
/// subscribers are ignored and failed respectively. Throws TraceOutOfOrder,
/// UnresolvableId.
SimulationResult run_simulation(const NetworkTopology& topology, const Trace& trace, Scheme scheme,
                                const SimOptions& options = {});

/// Both schemes on the same trace.
struct Comparison {
  SimulationResult baseline;
  SimulationResult intelligent;
  bool dominance_holds = true;
  bool routing_equivalent = true;
  std::vector<std::string> violations;
};

Comparison compare_schemes(const NetworkTopology& topology, const Trace& trace, const SimOptions& options = {});

/// `scope,key,counter,baseline,intelligent,delta` rows followed by the two
/// check results.
void write_report_csv(std::ostream& out, const Comparison& c);
void write_report_text(std::ostream& out, const Comparison& c);

/// `time_s,procedure,step,kind,from,to,imsi` per message.
void write_log_csv(std::ostream& out, const MessageLog& log);
/// Throws Parse.
MessageLog read_log_csv(std::istream& in);

}  // namespace gsmloc
