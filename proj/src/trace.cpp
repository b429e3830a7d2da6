#include "gsmloc/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "gsmloc/error.hpp"
#include "text.hpp"

namespace gsmloc {

std::string_view to_string(EventKind k) noexcept {
  switch (k) {
    case EventKind::Move: return "move";
    case EventKind::Call: return "call";
    case EventKind::PowerOn: return "on";
    case EventKind::PowerOff: return "off";
  }
  return "move";
}

std::optional<EventKind> parse_event_kind(std::string_view s) {
  s = text::trim(s);
  if (s == "move") return EventKind::Move;
  if (s == "call") return EventKind::Call;
  if (s == "on") return EventKind::PowerOn;
  if (s == "off") return EventKind::PowerOff;
  return std::nullopt;
}

std::string_view to_string(EveningRoute r) noexcept { return r == EveningRoute::Direct ? "direct" : "reverse"; }

Trace parse_trace(std::istream& in) {
  Trace trace;
  std::string raw;
  int line = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++line;
    const auto body = text::strip_comment(raw);
    if (body.empty()) continue;
    auto fields = text::split(body, ',');
    if (fields.size() == 3) fields.emplace_back();
    if (fields.size() != 4) fail("expected 'time_s, imsi, kind, arg'");
    const auto time = text::parse_number<SimTime>(fields[0]);
    if (!time || *time < 0) fail("bad time '" + fields[0] + "'");
    if (fields[1].empty()) fail("empty IMSI");
    const auto kind = parse_event_kind(fields[2]);
    if (!kind) fail("unknown event kind '" + fields[2] + "'");
    if (*kind != EventKind::PowerOff && fields[3].empty()) fail("event needs an argument");
    if (*kind == EventKind::PowerOff && !fields[3].empty()) fail("'off' takes no argument");
    trace.push_back({*time, Imsi(fields[1]), *kind, fields[3], line});
  }
  return trace;
}

Trace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open trace file '" + path.string() + "'");
  try {
    return parse_trace(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_trace(std::ostream& out, const Trace& trace) {
  out << "# time_s,imsi,kind,arg\n";
  for (const auto& e : trace) out << e.time << ',' << e.imsi << ',' << to_string(e.kind) << ',' << e.arg << '\n';
}

void save_trace(const std::filesystem::path& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write trace file '" + path.string() + "'");
  write_trace(out, trace);
  if (!out) throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

namespace {

std::string where(const TraceEvent& e, std::size_t index) {
  return e.line > 0 ? "line " + std::to_string(e.line) : "event " + std::to_string(index);
}

}  // namespace

void validate_trace(const Trace& trace, const NetworkTopology& topology) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& e = trace[i];
    if (i > 0 && e.time < trace[i - 1].time)
      throw Error(ErrorCode::TraceOutOfOrder, where(e, i) + ": time " + std::to_string(e.time) +
                                                  " precedes " + std::to_string(trace[i - 1].time));
    if ((e.kind == EventKind::Move || e.kind == EventKind::PowerOn) && !topology.has_cell(e.cell()))
      throw Error(ErrorCode::UnresolvableId, where(e, i) + ": unknown cell '" + e.arg + "'");
    if (e.kind == EventKind::Call && e.arg.empty())
      throw Error(ErrorCode::UnresolvableId, where(e, i) + ": call without callee");
  }
}

std::vector<Imsi> population_of(const Trace& trace) {
  std::set<Imsi> all;
  for (const auto& e : trace) {
    all.insert(e.imsi);
    if (e.kind == EventKind::Call) all.insert(e.callee());
  }
  return {all.begin(), all.end()};
}

std::optional<SimTime> parse_time_of_day(std::string_view s) {
  const auto parts = text::split(text::trim(s), ':');
  if (parts.size() < 2 || parts.size() > 3) return std::nullopt;
  const auto h = text::parse_number<int>(parts[0]);
  const auto m = text::parse_number<int>(parts[1]);
  const auto sec = parts.size() == 3 ? text::parse_number<int>(parts[2]) : std::optional<int>(0);
  if (!h || !m || !sec || *h < 0 || *h > 23 || *m < 0 || *m > 59 || *sec < 0 || *sec > 59) return std::nullopt;
  return SimTime{*h} * 3600 + *m * 60 + *sec;
}

std::string format_time_of_day(SimTime t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", static_cast<int>(t / 3600), static_cast<int>(t / 60 % 60),
                static_cast<int>(t % 60));
  return buf;
}

std::optional<Duration> parse_duration(std::string_view s) {
  s = text::trim(s);
  if (s.empty()) return std::nullopt;
  Duration unit = 1;
  switch (s.back()) {
    case 's': unit = 1; break;
    case 'm': unit = 60; break;
    case 'h': unit = 3600; break;
    case 'd': unit = kSecondsPerDay; break;
    default: unit = 0; break;
  }
  if (unit != 0) s.remove_suffix(1);
  else unit = 1;
  const auto v = text::parse_number<Duration>(s);
  if (!v || *v < 0) return std::nullopt;
  return *v * unit;
}

Imsi commuter_imsi(const CommuterParams& params, std::uint32_t ordinal) {
  std::string digits = std::to_string(ordinal + 1);
  std::string id = params.imsi_prefix;
  if (id.size() + digits.size() < 15) id.append(15 - id.size() - digits.size(), '0');
  return Imsi(id + digits);
}

Trace generate_commuter_trace(const CommuterParams& p, const NetworkTopology& topology) {
  auto first_cell = [&](const LaId& la) { return topology.cells_of(la).front().str(); };
  const auto home = first_cell(p.home_la);
  const auto work = first_cell(p.work_la);
  std::vector<std::string> transit;
  for (const auto& la : p.transit_las) transit.push_back(first_cell(la));

  if (p.leave_time >= p.return_time)
    throw Error(ErrorCode::Config, "leave_time must be earlier than return_time");
  if (p.transit_dwell <= 0) throw Error(ErrorCode::Config, "transit_dwell must be positive");
  const Duration leg = static_cast<Duration>(transit.size()) * (p.hop_time + p.transit_dwell);
  if (p.leave_time + leg >= p.return_time)
    throw Error(ErrorCode::Config, "morning commute does not finish before return_time");
  const Duration evening_len = p.evening_route == EveningRoute::Reverse ? leg : 0;
  if (p.return_time + evening_len + p.jitter_max >= kSecondsPerDay + p.leave_time)
    throw Error(ErrorCode::Config, "evening commute overlaps the next morning");

  Trace trace;
  Lcg rng(p.seed, p.lcg_multiplier, p.lcg_increment);
  for (std::uint32_t d = 0; d < p.days; ++d) {
    const SimTime base = SimTime{d} * kSecondsPerDay;
    for (std::uint32_t s = 0; s < p.population; ++s) {
      const auto imsi = commuter_imsi(p, s);
      const SimTime jitter = static_cast<SimTime>(rng.up_to(static_cast<std::uint64_t>(p.jitter_max)));
      if (d == 0) trace.push_back({0, imsi, EventKind::PowerOn, home, 0});
      SimTime t = base + p.leave_time + jitter;
      for (const auto& cell : transit) {
        t += p.hop_time;
        trace.push_back({t, imsi, EventKind::Move, cell, 0});
        t += p.transit_dwell;
      }
      trace.push_back({t, imsi, EventKind::Move, work, 0});
      t = base + p.return_time + jitter;
      if (p.evening_route == EveningRoute::Reverse) {
        for (auto it = transit.rbegin(); it != transit.rend(); ++it) {
          t += p.hop_time;
          trace.push_back({t, imsi, EventKind::Move, *it, 0});
          t += p.transit_dwell;
        }
      }
      trace.push_back({t, imsi, EventKind::Move, home, 0});
    }
  }
  std::stable_sort(trace.begin(), trace.end(),
                   [](const TraceEvent& a, const TraceEvent& b) { return a.time < b.time; });
  return trace;
}

}  // namespace gsmloc
