#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gsmloc/config.hpp"
#include "gsmloc/error.hpp"
#include "gsmloc/simulator.hpp"
#include "support/fixtures.hpp"
#include "support/random_trace.hpp"

using namespace gsmloc;
using namespace gsmloc::testing;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

std::string error_text(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

RunConfig config_of(const std::string& text) {
  std::istringstream in(text);
  return parse_run_config(in, {});
}

}  // namespace

TEST_CASE("trace files round-trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto rc = random_case(seed);
    std::stringstream buf;
    write_trace(buf, rc.trace);
    CHECK(parse_trace(buf) == rc.trace);
  }
}

TEST_CASE("trace parse errors name the line") {
  CHECK(error_text([] { trace_of("0,a,on,c1\nx,a,move,c2\n"); }).find("line 2") != std::string::npos);
  CHECK(error_of([] { trace_of("0,a,jump,c1\n"); }) == ErrorCode::Parse);
  CHECK(error_of([] { trace_of("0,a,off,c1\n"); }) == ErrorCode::Parse);
  CHECK(error_of([] { trace_of("0,a,on\n"); }) == ErrorCode::Parse);
  CHECK(error_of([] { load_trace("/nonexistent/trace.csv"); }) == ErrorCode::Io);
}

TEST_CASE("trace with comments and blank lines") {
  const auto t = trace_of("# header\n\n0, 001, on, c1  \n 5,001,call,002\n");
  REQUIRE(t.size() == 2);
  CHECK(t[0].cell() == CellId("c1"));
  CHECK(t[1].callee() == Imsi("002"));
  CHECK(population_of(t) == std::vector{Imsi("001"), Imsi("002")});
}

TEST_CASE("metrics files round-trip") {
  const auto rc = random_case(5);
  const auto r = run_simulation(rc.topology, rc.trace, Scheme::Intelligent);
  std::stringstream buf;
  write_metrics_csv(buf, r.metrics);
  const auto text = buf.str();
  CHECK(text.rfind("scope,key,hlr_profile_requests,", 0) == 0);
  CHECK(read_metrics_csv(buf) == r.metrics);
}

TEST_CASE("message logs round-trip") {
  const auto rc = random_case(9);
  const auto r = run_simulation(rc.topology, rc.trace, Scheme::Intelligent);
  std::stringstream buf;
  write_log_csv(buf, r.log);
  CHECK(read_log_csv(buf) == r.log);
}

TEST_CASE("counter names") {
  for (auto c : kAllCounters) CHECK(parse_counter(counter_name(c)) == c);
  CHECK_FALSE(parse_counter("nope").has_value());
}

TEST_CASE("comparison report") {
  const auto topo = commuter_topology();
  const auto cmp = compare_schemes(topo, generate_commuter_trace(commuter_params(), topo));
  std::ostringstream csv;
  write_report_csv(csv, cmp);
  CHECK(csv.str().find("msc,msc_podalakur,hlr_profile_requests,7,1,-6\n") != std::string::npos);
  CHECK(csv.str().find("check,cost_dominance,,holds,,") != std::string::npos);
  std::ostringstream txt;
  write_report_text(txt, cmp);
  CHECK(txt.str().find("cost dominance:      holds") != std::string::npos);
}

TEST_CASE("time and duration parsing") {
  CHECK(parse_time_of_day("08:30") == 8 * 3600 + 1800);
  CHECK(parse_time_of_day("00:00") == 0);
  CHECK_FALSE(parse_time_of_day("24:00").has_value());
  CHECK_FALSE(parse_time_of_day("8h").has_value());
  CHECK_FALSE(parse_time_of_day("12:60").has_value());
  CHECK(format_time_of_day(20 * 3600) == "20:00:00");
  CHECK(parse_time_of_day(format_time_of_day(8 * 3600 + 61)) == 8 * 3600 + 61);
  CHECK(parse_duration("600") == 600);
  CHECK(parse_duration("10m") == 600);
  CHECK(parse_duration("2h") == 7200);
  CHECK(parse_duration("7d") == 7 * kSecondsPerDay);
  CHECK_FALSE(parse_duration("7w").has_value());
}

TEST_CASE("lcg matches the published recurrence") {
  Lcg rng(1);
  CHECK(rng.next() == 908834774u);
  CHECK(rng.next() == 1093944153u);
  CHECK(rng.next() == 1392341196u);
}

TEST_CASE("commuter generator") {
  const auto topo = commuter_topology();
  auto p = commuter_params();
  const auto week = generate_commuter_trace(p, topo);
  std::size_t transit = 0;
  for (const auto& e : week)
    if (e.kind == EventKind::Move && topo.locate(e.cell()).la == LaId("la_podalakur")) {
      ++transit;
      CHECK(e.time % kSecondsPerDay == 8 * 3600 + 1800);
    }
  CHECK(transit == 7);
  CHECK(week.front().kind == EventKind::PowerOn);
  CHECK(commuter_imsi(p, 0) == Imsi("404100000000001"));

  p.days = 0;
  CHECK(generate_commuter_trace(p, topo).empty());

  p = commuter_params();
  p.population = 3;
  p.jitter_max = 900;
  p.seed = 42;
  CHECK(generate_commuter_trace(p, topo) == generate_commuter_trace(p, topo));
  p.seed = 43;
  auto other = generate_commuter_trace(p, topo);
  p.seed = 42;
  CHECK(other != generate_commuter_trace(p, topo));

  p = commuter_params();
  p.evening_route = EveningRoute::Reverse;
  transit = 0;
  for (const auto& e : generate_commuter_trace(p, topo))
    transit += e.kind == EventKind::Move && topo.locate(e.cell()).la == LaId("la_podalakur");
  CHECK(transit == 14);

  p = commuter_params();
  p.leave_time = p.return_time;
  CHECK(error_of([&] { generate_commuter_trace(p, topo); }) == ErrorCode::Config);
  p = commuter_params();
  p.transit_dwell = 0;
  CHECK(error_of([&] { generate_commuter_trace(p, topo); }) == ErrorCode::Config);
  p = commuter_params();
  p.work_la = LaId("la_nowhere");
  CHECK(error_of([&] { generate_commuter_trace(p, topo); }) == ErrorCode::UnknownLa);
}

TEST_CASE("generated traces round-trip through files") {
  const auto topo = commuter_topology();
  const auto trace = generate_commuter_trace(commuter_params(), topo);
  const auto path = std::filesystem::temp_directory_path() / "gsmloc_io_roundtrip.csv";
  save_trace(path, trace);
  CHECK(load_trace(path) == trace);
  std::filesystem::remove(path);
}

TEST_CASE("run configuration") {
  const auto c = config_of(
      "# comment\n"
      "topology = topo.txt\n"
      "trace = t.csv\n"
      "scheme = intelligent\n"
      "ttl = 3d\n"
      "ttl_high = 14d\n"
      "window_days = 5\n"
      "window_mode = sliding\n"
      "admission = cache_all\n"
      "refresh_billing = true\n"
      "seed = 99\n");
  CHECK(c.scheme == Scheme::Intelligent);
  CHECK(c.sim.tier.ttl[LinguisticLabel::Low] == 3 * kSecondsPerDay);
  CHECK(c.sim.tier.ttl[LinguisticLabel::High] == 14 * kSecondsPerDay);
  CHECK(c.sim.tier.window_days == 5);
  CHECK(c.sim.tier.window_mode == WindowMode::Sliding);
  CHECK(c.sim.tier.admission == AdmissionMode::CacheAll);
  CHECK(c.sim.intelligent.refresh_billing);
  CHECK(c.seed == 99);
  CHECK_NOTHROW(validate_run_config(c));
}

TEST_CASE("run configuration errors") {
  CHECK(error_of([] { config_of("colour = blue\n"); }) == ErrorCode::Config);
  CHECK(error_of([] { config_of("scheme = fast\n"); }) == ErrorCode::Config);
  CHECK(error_of([] { config_of("window_days = 0\n"); }) == ErrorCode::Config);
  CHECK(error_of([] { config_of("leave_time = 25:00\n"); }) == ErrorCode::Config);
  CHECK(error_of([] { config_of("just words\n"); }) == ErrorCode::Config);
  CHECK(error_text([] { config_of("\nttl = soon\n"); }).find("line 2") != std::string::npos);
  CHECK(error_of([] { load_run_config("/nonexistent/run.conf"); }) == ErrorCode::Io);

  CHECK(error_of([] { validate_run_config(config_of("trace = t.csv\n")); }) == ErrorCode::Config);
  CHECK(error_of([] { validate_run_config(config_of("topology = a\n")); }) == ErrorCode::Config);
  CHECK(error_of([] { validate_run_config(config_of("topology = a\ntrace = t\ndays = 3\n")); }) ==
        ErrorCode::Config);
  CHECK(error_of([] { validate_run_config(config_of("topology = a\ntrace = t\nlow_max = 9\n")); }) ==
        ErrorCode::Config);
}

TEST_CASE("config paths are relative to the config file") {
  const auto dir = std::filesystem::temp_directory_path() / "gsmloc_cfg_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "run.conf");
    out << "topology = topo.txt\nhome_la = la_a\n";
  }
  const auto c = load_run_config(dir / "run.conf");
  CHECK(*c.topology == dir / "topo.txt");
  REQUIRE(c.generator.has_value());
  CHECK(c.generator->home_la == LaId("la_a"));
  std::filesystem::remove_all(dir);
}
