#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gsmloc/ids.hpp"
#include "gsmloc/network.hpp"

namespace gsmloc {

enum class EventKind { Move, Call, PowerOn, PowerOff };

/// `move`, `call`, `on`, `off`.
std::string_view to_string(EventKind k) noexcept;
std::optional<EventKind> parse_event_kind(std::string_view s);

struct TraceEvent {
  SimTime time = 0;
  Imsi imsi;
  EventKind kind = EventKind::Move;
  /// Target cell for move/on, callee IMSI for call, empty for off.
  std::string arg;
  /// Source line when parsed from a file, 0 otherwise. Not part of equality.
  int line = 0;

  CellId cell() const { return CellId(arg); }
  Imsi callee() const { return Imsi(arg); }

  friend bool operator==(const TraceEvent& a, const TraceEvent& b) {
    return a.time == b.time && a.imsi == b.imsi && a.kind == b.kind && a.arg == b.arg;
  }
};

using Trace = std::vector<TraceEvent>;

/// `time_s, imsi, kind, arg` per line. Throws Parse with the line number.
Trace parse_trace(std::istream& in);
Trace load_trace(const std::filesystem::path& path);
void write_trace(std::ostream& out, const Trace& trace);
void save_trace(const std::filesystem::path& path, const Trace& trace);

/// Checks time order and that every cell resolves. Throws TraceOutOfOrder,
/// UnresolvableId.
void validate_trace(const Trace& trace, const NetworkTopology& topology);

/// Every IMSI mentioned by the trace (subjects and callees), sorted.
std::vector<Imsi> population_of(const Trace& trace);

/// `HH:MM` or `HH:MM:SS` within one day.
std::optional<SimTime> parse_time_of_day(std::string_view s);
std::string format_time_of_day(SimTime t);
/// Integer with optional unit suffix `s`, `m`, `h` or `d` (seconds by default).
std::optional<Duration> parse_duration(std::string_view s);

/// 64-bit linear congruential generator, x' = a*x + c mod 2^64. The constants
/// come from the run configuration so other implementations can reproduce
/// the same jitter.
class Lcg {
 public:
  static constexpr std::uint64_t kDefaultMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kDefaultIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed, std::uint64_t a = kDefaultMultiplier, std::uint64_t c = kDefaultIncrement)
      : state_(seed), a_(a), c_(c) {}

  /// Upper 31 bits of the next state.
  std::uint32_t next() noexcept {
    state_ = a_ * state_ + c_;
    return static_cast<std::uint32_t>(state_ >> 33);
  }
  /// Uniform-ish draw from [0, bound].
  std::uint64_t up_to(std::uint64_t bound) noexcept { return bound == 0 ? 0 : next() % (bound + 1); }

 private:
  std::uint64_t state_;
  std::uint64_t a_;
  std::uint64_t c_;
};

enum class EveningRoute {
  Direct,   // work -> home at return_time
  Reverse,  // leave work at return_time, retrace the transit LAs
};

std::string_view to_string(EveningRoute r) noexcept;

/// Daily home -> transit -> work commute, reversed in the evening.
struct CommuterParams {
  LaId home_la{"la_home"};
  LaId work_la{"la_work"};
  std::vector<LaId> transit_las{LaId("la_transit")};
  SimTime leave_time = 8 * 3600;
  SimTime return_time = 20 * 3600;
  Duration transit_dwell = 600;
  /// Travel time from one LA to the next.
  Duration hop_time = 1800;
  std::uint32_t days = 7;
  std::uint32_t population = 1;
  std::uint64_t seed = 1;
  /// Per subscriber-day shift of all that day's times, drawn from [0, jitter_max].
  Duration jitter_max = 0;
  EveningRoute evening_route = EveningRoute::Direct;
  std::uint64_t lcg_multiplier = Lcg::kDefaultMultiplier;
  std::uint64_t lcg_increment = Lcg::kDefaultIncrement;
  std::string imsi_prefix = "40410";
};

/// IMSI of the n-th generated subscriber: prefix padded with zeros to 15 digits.
Imsi commuter_imsi(const CommuterParams& params, std::uint32_t ordinal);

/// Each subscriber powers on in home_la at time 0, then every day passes
/// through the transit LAs (hop_time apart, transit_dwell each) to work_la
/// and comes back in the evening. Throws UnknownLa, Config (inconsistent
/// times).
Trace generate_commuter_trace(const CommuterParams& params, const NetworkTopology& topology);

}  // namespace gsmloc
