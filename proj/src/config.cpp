#include "gsmloc/config.hpp"

#include <fstream>

#include "gsmloc/error.hpp"
#include "text.hpp"

namespace gsmloc {

namespace {

[[noreturn]] void bad(std::string_view key, std::string_view value, std::string_view expected) {
  throw Error(ErrorCode::Config, "bad value '" + std::string(value) + "' for '" + std::string(key) + "' (expected " +
                                     std::string(expected) + ")");
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad(key, v, "true/false");
}

template <class T>
T parse_uint(std::string_view key, std::string_view v) {
  const auto n = text::parse_number<T>(v);
  if (!n) bad(key, v, "a non-negative integer");
  return *n;
}

Duration duration(std::string_view key, std::string_view v) {
  const auto d = parse_duration(v);
  if (!d) bad(key, v, "a duration such as 600, 10m, 2h or 7d");
  return *d;
}

SimTime time_of_day(std::string_view key, std::string_view v) {
  const auto t = parse_time_of_day(v);
  if (!t) bad(key, v, "a time of day HH:MM");
  return *t;
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view v) {
  std::filesystem::path p{std::string(v)};
  return p.is_absolute() || base.empty() ? p : base / p;
}

CommuterParams& generator(RunConfig& c) {
  if (!c.generator) c.generator.emplace();
  return *c.generator;
}

}  // namespace

void apply_setting(RunConfig& c, std::string_view key, std::string_view value, const std::filesystem::path& base) {
  const auto v = text::trim(value);
  auto& tier = c.sim.tier;
  if (key == "topology") {
    c.topology = resolve(base, v);
  } else if (key == "trace") {
    c.trace = resolve(base, v);
  } else if (key == "output" || key == "out") {
    c.output = resolve(base, v);
  } else if (key == "scheme") {
    const auto s = parse_scheme(v);
    if (!s) bad(key, v, "baseline or intelligent");
    c.scheme = *s;
  } else if (key == "seed") {
    c.seed = parse_uint<std::uint64_t>(key, v);
  } else if (key == "verbose_log") {
    c.verbose_log = parse_bool(key, v);
  } else if (key == "ttl") {
    const auto d = duration(key, v);
    tier.ttl.by_label = {d, d, d};
  } else if (key == "ttl_low") {
    tier.ttl[LinguisticLabel::Low] = duration(key, v);
  } else if (key == "ttl_medium") {
    tier.ttl[LinguisticLabel::Medium] = duration(key, v);
  } else if (key == "ttl_high") {
    tier.ttl[LinguisticLabel::High] = duration(key, v);
  } else if (key == "window_days") {
    tier.window_days = parse_uint<std::size_t>(key, v);
    if (tier.window_days == 0) bad(key, v, "at least 1");
  } else if (key == "window_mode") {
    if (v == "tumbling") tier.window_mode = WindowMode::Tumbling;
    else if (v == "sliding") tier.window_mode = WindowMode::Sliding;
    else bad(key, v, "tumbling or sliding");
  } else if (key == "admission") {
    if (v == "common_ms_gated") tier.admission = AdmissionMode::CommonMsGated;
    else if (v == "cache_all") tier.admission = AdmissionMode::CacheAll;
    else bad(key, v, "common_ms_gated or cache_all");
  } else if (key == "low_max") {
    tier.thresholds.low_max = parse_uint<std::uint64_t>(key, v);
  } else if (key == "medium_max") {
    tier.thresholds.medium_max = parse_uint<std::uint64_t>(key, v);
  } else if (key == "refresh_billing") {
    c.sim.intelligent.refresh_billing = parse_bool(key, v);
  } else if (key == "corrupt_dominance") {
    c.sim.intelligent.corrupt_dominance = parse_bool(key, v);
  } else if (key == "horizon_days") {
    c.sim.horizon_days = parse_uint<std::int64_t>(key, v);
  } else if (key == "home_la") {
    generator(c).home_la = LaId(std::string(v));
  } else if (key == "work_la") {
    generator(c).work_la = LaId(std::string(v));
  } else if (key == "transit_las") {
    auto& g = generator(c);
    g.transit_las.clear();
    for (auto& la : text::split(v, ';'))
      if (!la.empty()) g.transit_las.emplace_back(la);
  } else if (key == "leave_time") {
    generator(c).leave_time = time_of_day(key, v);
  } else if (key == "return_time") {
    generator(c).return_time = time_of_day(key, v);
  } else if (key == "transit_dwell") {
    generator(c).transit_dwell = duration(key, v);
  } else if (key == "hop_time") {
    generator(c).hop_time = duration(key, v);
  } else if (key == "days") {
    generator(c).days = parse_uint<std::uint32_t>(key, v);
  } else if (key == "population") {
    generator(c).population = parse_uint<std::uint32_t>(key, v);
  } else if (key == "jitter_max") {
    generator(c).jitter_max = duration(key, v);
  } else if (key == "evening_route") {
    if (v == "direct") generator(c).evening_route = EveningRoute::Direct;
    else if (v == "reverse") generator(c).evening_route = EveningRoute::Reverse;
    else bad(key, v, "direct or reverse");
  } else if (key == "lcg_multiplier") {
    generator(c).lcg_multiplier = parse_uint<std::uint64_t>(key, v);
  } else if (key == "lcg_increment") {
    generator(c).lcg_increment = parse_uint<std::uint64_t>(key, v);
  } else if (key == "imsi_prefix") {
    if (v.empty() || v.size() > 14 || v.find_first_not_of("0123456789") != std::string_view::npos)
      bad(key, v, "1-14 digits");
    generator(c).imsi_prefix = std::string(v);
  } else {
    throw Error(ErrorCode::Config, "unknown setting '" + std::string(key) + "'");
  }
}

RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir) {
  RunConfig config;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto body = text::strip_comment(raw);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::Config, "line " + std::to_string(line) + ": expected 'key = value'");
    try {
      apply_setting(config, text::trim(body.substr(0, eq)), body.substr(eq + 1), base_dir);
    } catch (const Error& e) {
      throw Error(ErrorCode::Config, "line " + std::to_string(line) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config file '" + path.string() + "'");
  try {
    return parse_run_config(in, path.parent_path());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void validate_run_config(const RunConfig& c) {
  if (!c.topology) throw Error(ErrorCode::Config, "no topology given");
  if (c.trace.has_value() == c.generator.has_value())
    throw Error(ErrorCode::Config, "give exactly one of a trace file or commuter generator parameters");
  if (c.sim.tier.window_days == 0) throw Error(ErrorCode::Config, "window_days must be at least 1");
  if (c.sim.tier.thresholds.low_max > c.sim.tier.thresholds.medium_max)
    throw Error(ErrorCode::Config, "low_max must not exceed medium_max");
}

Trace resolve_trace(const RunConfig& c, const NetworkTopology& topology) {
  if (c.trace) return load_trace(*c.trace);
  if (!c.generator) throw Error(ErrorCode::Config, "no trace source configured");
  auto params = *c.generator;
  params.seed = c.seed;
  return generate_commuter_trace(params, topology);
}

}  // namespace gsmloc
