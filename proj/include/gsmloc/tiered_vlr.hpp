#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "gsmloc/fuzzy.hpp"
#include "gsmloc/ids.hpp"
#include "gsmloc/network.hpp"

namespace gsmloc {

enum class AdmissionMode {
  CommonMsGated,  // at each full window, drop cached visitors that were not seen every day
  CacheAll,       // keep every cached visitor until its TTL runs out
};

enum class WindowMode { Tumbling, Sliding };

std::string_view to_string(AdmissionMode m) noexcept;
std::string_view to_string(WindowMode m) noexcept;

struct TtlPolicy {
  std::array<Duration, 3> by_label{7 * kSecondsPerDay, 7 * kSecondsPerDay, 7 * kSecondsPerDay};

  Duration& operator[](LinguisticLabel l) { return by_label[static_cast<std::size_t>(l)]; }
  Duration operator[](LinguisticLabel l) const { return by_label[static_cast<std::size_t>(l)]; }
};

Duration ttl_for_label(const TtlPolicy& policy, LinguisticLabel label);

struct TierConfig {
  TtlPolicy ttl;
  std::size_t window_days = 7;
  WindowMode window_mode = WindowMode::Tumbling;
  AdmissionMode admission = AdmissionMode::CommonMsGated;
  ClassThresholds thresholds;
};

/// Tier-2 entry. `expiry` is always `last_seen + ttl(label)`; last_seen is
/// the latest arrival, departure, or day boundary the subscriber was present at.
struct FuzzyVlrRecord {
  SubscriberProfile profile;
  VisitStats stats;
  LinguisticLabel label = LinguisticLabel::Low;
  SimTime last_seen = 0;
  SimTime expiry = 0;
  LaId last_la;

  bool live_at(SimTime now) const noexcept { return expiry > now; }
};

/// IMSIs seen in the MSC area on each day of an observation period.
struct ObservationWindow {
  std::vector<std::set<Imsi>> daily_sets;

  std::size_t days() const noexcept { return daily_sets.size(); }
};

/// IMSIs present on every day of the window. Throws EmptyWindow.
std::set<Imsi> get_common_ms(const ObservationWindow& window);

/// Per-MSC visitor store: tier 1 holds subscribers currently in the area,
/// tier 2 holds visit statistics and retained profiles of frequent visitors.
class TieredVlr {
 public:
  explicit TieredVlr(MscId msc, TierConfig config = {});

  const MscId& msc() const noexcept { return msc_; }
  const TierConfig& config() const noexcept { return config_; }

  Vlr& tier1() noexcept { return tier1_; }
  const Vlr& tier1() const noexcept { return tier1_; }

  const std::map<Imsi, FuzzyVlrRecord>& tier2() const noexcept { return tier2_; }
  const FuzzyVlrRecord* tier2_find(const Imsi& imsi) const;
  bool tier2_live(const Imsi& imsi, SimTime now) const;

  const ObservationWindow& window() const noexcept { return window_; }
  /// Index of today inside the observation window.
  std::size_t current_day_slot() const noexcept { return slot_; }

  /// Creates the tier-2 entry if missing, otherwise refreshes its profile copy.
  FuzzyVlrRecord& admit(const SubscriberProfile& profile, const LaId& la, SimTime now);

  /// Counts one arrival on `day_index` of the window and re-derives the
  /// total, label and expiry. Throws DayOutOfWindow, UnknownImsi (not admitted).
  const VisitStats& record_visit(const Imsi& imsi, std::size_t day_index, const LaId& la, SimTime now);

  /// Moves a live tier-2 entry into tier 1 at the given position and returns
  /// the new tier-1 record. Throws UnknownImsi when nothing live is cached.
  const VlrRecord& promote(const Imsi& imsi, const LaId& la, const CellId& cell, SimTime now);

  /// Subscriber left the area: drops tier 1 and keeps the tier-2 entry with
  /// a TTL counted from now. Returns false if there was no tier-1 record.
  bool demote(const Imsi& imsi, SimTime now);

  /// Evicts tier-2 entries with expiry <= now and returns their IMSIs sorted.
  /// Tier 1 only ever holds subscribers currently in the area, so it is untouched.
  std::vector<Imsi> expire_records(SimTime now);

  /// Start-of-day housekeeping at `boundary` (a multiple of one day):
  /// refreshes present subscribers, rolls the observation window (applying
  /// common-MS gating on a full window) and sweeps expired entries.
  /// Returns every evicted IMSI, sorted.
  std::vector<Imsi> on_day_boundary(SimTime boundary);

 private:
  void rollover_window(std::vector<Imsi>& evicted);
  void relabel(FuzzyVlrRecord& rec);

  MscId msc_;
  TierConfig config_;
  Vlr tier1_;
  std::map<Imsi, FuzzyVlrRecord> tier2_;
  ObservationWindow window_;
  std::size_t slot_ = 0;
};

}  // namespace gsmloc
