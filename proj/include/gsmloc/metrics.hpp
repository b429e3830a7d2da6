#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>

#include "gsmloc/ids.hpp"
#include "gsmloc/protocol.hpp"

namespace gsmloc {

enum class Counter : std::size_t {
  HlrProfileRequests,
  HlrLocationRequests,
  HlrPointerUpdates,
  HlrBillingQueries,
  VlrLookups,
  Cancellations,
  RegistrationsFull,
  RegistrationsTier2Hit,
  RegistrationsTier1Hit,
  CallsDelivered,
  CallsFailed,
  Tier2Evictions,
};

inline constexpr std::size_t kCounterCount = 12;

std::string_view counter_name(Counter c) noexcept;
std::optional<Counter> parse_counter(std::string_view name);

inline constexpr std::array<Counter, kCounterCount> kAllCounters{
    Counter::HlrProfileRequests,    Counter::HlrLocationRequests,   Counter::HlrPointerUpdates,
    Counter::HlrBillingQueries,     Counter::VlrLookups,            Counter::Cancellations,
    Counter::RegistrationsFull,     Counter::RegistrationsTier2Hit, Counter::RegistrationsTier1Hit,
    Counter::CallsDelivered,        Counter::CallsFailed,           Counter::Tier2Evictions,
};

struct Counters {
  std::array<std::uint64_t, kCounterCount> values{};

  std::uint64_t& operator[](Counter c) { return values[static_cast<std::size_t>(c)]; }
  std::uint64_t operator[](Counter c) const { return values[static_cast<std::size_t>(c)]; }

  /// HLR profile plus location queries: the quantity the two-tier scheme
  /// must never increase.
  std::uint64_t hlr_queries() const {
    return (*this)[Counter::HlrProfileRequests] + (*this)[Counter::HlrLocationRequests];
  }

  friend bool operator==(const Counters&, const Counters&) = default;
};

/// Run totals with per-MSC and per-day breakdowns.
struct Metrics {
  Counters total;
  std::map<MscId, Counters> per_msc;
  std::map<std::int64_t, Counters> per_day;

  void add(Counter c, const MscId& msc, std::int64_t day, std::uint64_t n = 1);
  /// Maps one logged message onto the HLR/VLR counters it represents.
  void account(const Message& m);

  /// Zero counters for an MSC that saw no traffic.
  Counters msc(const MscId& m) const;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Header `scope,key,<counter names>`, then one `total,all` row, one `msc,<id>`
/// row per MSC and one `day,<n>` row per simulated day.
void write_metrics_csv(std::ostream& out, const Metrics& m);
/// Throws Parse.
Metrics read_metrics_csv(std::istream& in);

}  // namespace gsmloc
