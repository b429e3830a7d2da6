#include "gsmloc/tiered_vlr.hpp"

#include <algorithm>

#include "gsmloc/error.hpp"

namespace gsmloc {

std::string_view to_string(AdmissionMode m) noexcept {
  return m == AdmissionMode::CommonMsGated ? "common_ms_gated" : "cache_all";
}

std::string_view to_string(WindowMode m) noexcept { return m == WindowMode::Tumbling ? "tumbling" : "sliding"; }

Duration ttl_for_label(const TtlPolicy& policy, LinguisticLabel label) { return policy[label]; }

std::set<Imsi> get_common_ms(const ObservationWindow& window) {
  if (window.daily_sets.empty()) throw Error(ErrorCode::EmptyWindow, "observation window has no days");
  std::set<Imsi> common = window.daily_sets.front();
  for (std::size_t d = 1; d < window.daily_sets.size() && !common.empty(); ++d) {
    const auto& day = window.daily_sets[d];
    std::erase_if(common, [&](const Imsi& i) { return day.count(i) == 0; });
  }
  return common;
}

TieredVlr::TieredVlr(MscId msc, TierConfig config) : msc_(std::move(msc)), config_(config) {
  if (config_.window_days == 0) throw Error(ErrorCode::EmptyWindow, "window length must be at least one day");
  window_.daily_sets.resize(config_.window_days);
}

const FuzzyVlrRecord* TieredVlr::tier2_find(const Imsi& imsi) const {
  const auto it = tier2_.find(imsi);
  return it == tier2_.end() ? nullptr : &it->second;
}

bool TieredVlr::tier2_live(const Imsi& imsi, SimTime now) const {
  const auto* rec = tier2_find(imsi);
  return rec != nullptr && rec->live_at(now);
}

void TieredVlr::relabel(FuzzyVlrRecord& rec) {
  rec.label = classify_visits(rec.stats, config_.thresholds);
  rec.expiry = rec.last_seen + ttl_for_label(config_.ttl, rec.label);
}

FuzzyVlrRecord& TieredVlr::admit(const SubscriberProfile& profile, const LaId& la, SimTime now) {
  auto [it, inserted] = tier2_.try_emplace(profile.imsi);
  auto& rec = it->second;
  rec.profile = profile;
  rec.last_la = la;
  if (inserted) {
    rec.stats = VisitStats(profile.imsi, config_.window_days);
    rec.last_seen = now;
    relabel(rec);
  }
  return rec;
}

const VisitStats& TieredVlr::record_visit(const Imsi& imsi, std::size_t day_index, const LaId& la, SimTime now) {
  if (day_index >= config_.window_days)
    throw Error(ErrorCode::DayOutOfWindow, "day " + std::to_string(day_index) + " outside a " +
                                               std::to_string(config_.window_days) + "-day window");
  const auto it = tier2_.find(imsi);
  if (it == tier2_.end()) throw Error(ErrorCode::UnknownImsi, "no visit statistics for '" + imsi.str() + "'");
  auto& rec = it->second;
  ++rec.stats.per_day_visits[day_index];
  rec.stats.recount();
  rec.last_seen = std::max(rec.last_seen, now);
  rec.last_la = la;
  relabel(rec);
  window_.daily_sets[day_index].insert(imsi);
  return rec.stats;
}

const VlrRecord& TieredVlr::promote(const Imsi& imsi, const LaId& la, const CellId& cell, SimTime now) {
  const auto it = tier2_.find(imsi);
  if (it == tier2_.end() || !it->second.live_at(now))
    throw Error(ErrorCode::UnknownImsi, "no live cached profile for '" + imsi.str() + "'");
  tier1_.insert(VlrRecord{it->second.profile, la, cell, VlrStatus::Idle});
  return *tier1_.find(imsi);
}

bool TieredVlr::demote(const Imsi& imsi, SimTime now) {
  const auto* rec = tier1_.find(imsi);
  if (rec == nullptr) return false;
  if (const auto it = tier2_.find(imsi); it != tier2_.end()) {
    it->second.profile = rec->profile;
    it->second.last_la = rec->la;
    it->second.last_seen = std::max(it->second.last_seen, now);
    relabel(it->second);
  }
  tier1_.erase(imsi);
  return true;
}

std::vector<Imsi> TieredVlr::expire_records(SimTime now) {
  std::vector<Imsi> evicted;
  for (auto it = tier2_.begin(); it != tier2_.end();) {
    if (it->second.expiry <= now) {
      evicted.push_back(it->first);
      it = tier2_.erase(it);
    } else {
      ++it;
    }
  }
  return evicted;  // map order is already sorted by IMSI
}

void TieredVlr::rollover_window(std::vector<Imsi>& evicted) {
  const bool full = slot_ + 1 == config_.window_days;
  if (full && config_.admission == AdmissionMode::CommonMsGated) {
    const auto common = get_common_ms(window_);
    for (auto it = tier2_.begin(); it != tier2_.end();) {
      if (common.count(it->first) == 0 && !tier1_.contains(it->first)) {
        evicted.push_back(it->first);
        it = tier2_.erase(it);
      } else {
        ++it;
      }
    }
  }
  if (!full) {
    ++slot_;
  } else if (config_.window_mode == WindowMode::Tumbling) {
    for (auto& day : window_.daily_sets) day.clear();
    for (auto& [imsi, rec] : tier2_) {
      std::fill(rec.stats.per_day_visits.begin(), rec.stats.per_day_visits.end(), 0u);
      rec.stats.recount();
    }
    slot_ = 0;
  } else {
    std::rotate(window_.daily_sets.begin(), window_.daily_sets.begin() + 1, window_.daily_sets.end());
    window_.daily_sets.back().clear();
    for (auto& [imsi, rec] : tier2_) {
      auto& days = rec.stats.per_day_visits;
      std::rotate(days.begin(), days.begin() + 1, days.end());
      days.back() = 0;
      rec.stats.recount();
    }
  }
  for (const auto& [imsi, rec] : tier1_.records()) window_.daily_sets[slot_].insert(imsi);
}

std::vector<Imsi> TieredVlr::on_day_boundary(SimTime boundary) {
  for (const auto& [imsi, rec] : tier1_.records()) {
    if (const auto it = tier2_.find(imsi); it != tier2_.end()) {
      it->second.last_seen = std::max(it->second.last_seen, boundary);
      relabel(it->second);
    }
  }
  std::vector<Imsi> evicted;
  rollover_window(evicted);
  const auto expired = expire_records(boundary);
  evicted.insert(evicted.end(), expired.begin(), expired.end());
  std::sort(evicted.begin(), evicted.end());
  return evicted;
}

}  // namespace gsmloc
