#include "gsmloc/metrics.hpp"

#include <string>

#include "gsmloc/error.hpp"
#include "text.hpp"

namespace gsmloc {

namespace {

constexpr std::array<std::string_view, kCounterCount> kNames{
    "hlr_profile_requests", "hlr_location_requests",    "hlr_pointer_updates",     "hlr_billing_queries",
    "vlr_lookups",          "cancellations",            "registrations_full",      "registrations_tier2_hit",
    "registrations_tier1_hit", "calls_delivered",       "calls_failed",            "tier2_evictions",
};

}  // namespace

std::string_view counter_name(Counter c) noexcept { return kNames[static_cast<std::size_t>(c)]; }

std::optional<Counter> parse_counter(std::string_view name) {
  for (auto c : kAllCounters)
    if (counter_name(c) == name) return c;
  return std::nullopt;
}

void Metrics::add(Counter c, const MscId& msc, std::int64_t day, std::uint64_t n) {
  total[c] += n;
  per_msc[msc][c] += n;
  per_day[day][c] += n;
}

void Metrics::account(const Message& m) {
  const auto day = day_of(m.time);
  switch (m.kind) {
    case MessageKind::VlrCheck: add(Counter::VlrLookups, MscId(m.from.id), day); break;
    case MessageKind::ProfileRequest: add(Counter::HlrProfileRequests, MscId(m.from.id), day); break;
    case MessageKind::ProfileResponseAndHlrUpdate: add(Counter::HlrPointerUpdates, MscId(m.to.id), day); break;
    case MessageKind::HlrPointerUpdate: add(Counter::HlrPointerUpdates, MscId(m.from.id), day); break;
    case MessageKind::BillingRefresh: add(Counter::HlrBillingQueries, MscId(m.from.id), day); break;
    case MessageKind::CancelOld: add(Counter::Cancellations, MscId(m.to.id), day); break;
    case MessageKind::LocationRequest: add(Counter::HlrLocationRequests, MscId(m.from.id), day); break;
    default: break;
  }
}

Counters Metrics::msc(const MscId& m) const {
  const auto it = per_msc.find(m);
  return it == per_msc.end() ? Counters{} : it->second;
}

namespace {

void write_row(std::ostream& out, std::string_view scope, const std::string& key, const Counters& c) {
  out << scope << ',' << key;
  for (auto v : c.values) out << ',' << v;
  out << '\n';
}

}  // namespace

void write_metrics_csv(std::ostream& out, const Metrics& m) {
  out << "scope,key";
  for (auto c : kAllCounters) out << ',' << counter_name(c);
  out << '\n';
  write_row(out, "total", "all", m.total);
  for (const auto& [msc, c] : m.per_msc) write_row(out, "msc", msc.str(), c);
  for (const auto& [day, c] : m.per_day) write_row(out, "day", std::to_string(day), c);
}

Metrics read_metrics_csv(std::istream& in) {
  Metrics m;
  std::string raw;
  int line = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Parse, "metrics line " + std::to_string(line) + ": " + why);
  };
  if (!std::getline(in, raw)) throw Error(ErrorCode::Parse, "metrics file is empty");
  ++line;
  const auto header = text::split(text::trim(raw), ',');
  if (header.size() != kCounterCount + 2 || header[0] != "scope" || header[1] != "key") fail("bad header");
  std::array<Counter, kCounterCount> order{};
  for (std::size_t i = 0; i < kCounterCount; ++i) {
    const auto c = parse_counter(header[i + 2]);
    if (!c) fail("unknown counter '" + header[i + 2] + "'");
    order[i] = *c;
  }
  while (std::getline(in, raw)) {
    ++line;
    const auto body = text::trim(raw);
    if (body.empty()) continue;
    const auto fields = text::split(body, ',');
    if (fields.size() != kCounterCount + 2) fail("wrong field count");
    Counters c;
    for (std::size_t i = 0; i < kCounterCount; ++i) {
      const auto v = text::parse_number<std::uint64_t>(fields[i + 2]);
      if (!v) fail("bad counter value '" + fields[i + 2] + "'");
      c[order[i]] = *v;
    }
    if (fields[0] == "total") {
      m.total = c;
    } else if (fields[0] == "msc") {
      m.per_msc[MscId(fields[1])] = c;
    } else if (fields[0] == "day") {
      const auto d = text::parse_number<std::int64_t>(fields[1]);
      if (!d) fail("bad day '" + fields[1] + "'");
      m.per_day[*d] = c;
    } else {
      fail("unknown scope '" + fields[0] + "'");
    }
  }
  return m;
}

}  // namespace gsmloc
