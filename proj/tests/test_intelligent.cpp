#include <sstream>

#include "doctest.h"
#include "gsmloc/error.hpp"
#include "gsmloc/intelligent.hpp"

using namespace gsmloc;

namespace {

constexpr SimTime kDay = kSecondsPerDay;
const Imsi kA("001010000000001");
const Imsi kB("001010000000002");
const MscId kM1("msc1");
const MscId kM2("msc2");
const CellId kHome("c1");
const CellId kAway("c7");

Network make_net(TierConfig cfg = {}) {
  std::istringstream in("c1, la1, msc1\nc3, la2, msc1\nc7, la3, msc2\n");
  Network net(build_topology(parse_topology_spec(in)), cfg);
  net.provision(make_default_profile(kA, 0));
  net.provision(make_default_profile(kB, 1));
  return net;
}

std::size_t count(const MessageLog& log, MessageKind k) {
  std::size_t n = 0;
  for (const auto& m : log) n += m.kind == k;
  return n;
}

}  // namespace

TEST_CASE("first arrival matches the standard procedure") {
  auto smart = make_net();
  auto plain = make_net();
  MessageLog a, b;
  CHECK(intelligent_register(smart, kA, kHome, 0, a) == IntelligentOutcome::MissFullProcedure);
  register_arrival(plain, kA, kHome, 0, b);
  CHECK(a == b);
  CHECK(smart.vlr(kM1).tier2_find(kA) != nullptr);
}

TEST_CASE("returning within the ttl skips the profile request") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  intelligent_register(net, kA, kAway, 100, log);
  MessageLog back;
  CHECK(intelligent_register(net, kA, kHome, 200, back) == IntelligentOutcome::Tier2HitPromoted);
  CHECK(back.kinds() == std::vector{MessageKind::VlrCheck, MessageKind::HlrPointerUpdate, MessageKind::CancelOld,
                                    MessageKind::VlrStore});
  CHECK(count(back, MessageKind::ProfileRequest) == 0);
  CHECK(net.hlr().lookup(kA).serving_vlr == kM1);
  CHECK_FALSE(net.vlr(kM2).tier1().contains(kA));
  CHECK(net.vlr(kM2).tier2_find(kA) != nullptr);
}

TEST_CASE("billing refresh adds one message on a cache hit") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  intelligent_register(net, kA, kAway, 100, log);
  MessageLog back;
  intelligent_register(net, kA, kHome, 200, back, {.refresh_billing = true});
  CHECK(count(back, MessageKind::BillingRefresh) == 1);
  CHECK(count(back, MessageKind::ProfileRequest) == 0);
}

TEST_CASE("same-switch arrival is a tier-1 hit") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  MessageLog again;
  CHECK(intelligent_register(net, kA, CellId("c3"), 10, again) == IntelligentOutcome::Tier1Hit);
  CHECK(again.size() == 1);
}

TEST_CASE("an expired record falls back to the full procedure") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  intelligent_register(net, kA, kAway, 100, log);
  for (int d = 1; d <= 9; ++d)
    for (auto& [msc, tv] : net.vlrs()) tv.on_day_boundary(d * kDay);
  CHECK(net.vlr(kM1).tier2_find(kA) == nullptr);
  MessageLog back;
  CHECK(intelligent_register(net, kA, kHome, 9 * kDay + 1, back) == IntelligentOutcome::MissFullProcedure);
  CHECK(count(back, MessageKind::ProfileRequest) == 1);
}

TEST_CASE("zero ttl degenerates to the standard scheme") {
  TierConfig cfg;
  cfg.ttl = TtlPolicy{{0, 0, 0}};
  auto smart = make_net(cfg);
  auto plain = make_net(cfg);
  MessageLog a, b;
  const std::vector<CellId> path{kHome, kAway, kHome, kAway, kHome};
  SimTime t = 0;
  for (const auto& c : path) {
    const auto outcome = intelligent_register(smart, kA, c, t, a);
    CHECK(outcome == IntelligentOutcome::MissFullProcedure);
    register_arrival(plain, kA, c, t, b);
    t += 50;
  }
  CHECK(a.kinds() == b.kinds());
}

TEST_CASE("cached callee at the calling switch is reached without the hlr") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  intelligent_register(net, kB, CellId("c3"), 0, log);
  MessageLog call;
  const auto route = intelligent_deliver(net, kA, kB, 10, call);
  CHECK(call.kinds() == std::vector{MessageKind::CallInit, MessageKind::CallSetup});
  CHECK(route.called_msc == kM1);
  CHECK(route.tldn.owner_msc == kM1);
}

TEST_CASE("unknown or remote callee uses the six-step delivery") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  intelligent_register(net, kB, kAway, 0, log);
  MessageLog call;
  const auto route = intelligent_deliver(net, kA, kB, 10, call);
  CHECK(call.size() == 6);
  CHECK(route.called_msc == kM2);
}

TEST_CASE("a callee that left is not routed from a stale cache entry") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  intelligent_register(net, kB, CellId("c3"), 0, log);
  intelligent_register(net, kB, kAway, 5, log);
  MessageLog call;
  const auto route = intelligent_deliver(net, kA, kB, 10, call);
  CHECK(route.called_msc == kM2);
  CHECK(count(call, MessageKind::LocationRequest) == 1);
}

TEST_CASE("detached parties fail the call") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  MessageLog call;
  CHECK_THROWS_AS(intelligent_deliver(net, kA, kB, 1, call), Error);
  CHECK_THROWS_AS(intelligent_deliver(net, kB, kA, 1, call), Error);
}

TEST_CASE("power off keeps the cached statistics") {
  auto net = make_net();
  MessageLog log;
  intelligent_register(net, kA, kHome, 0, log);
  power_off(net, kA, 100, CancelEffect::Demote);
  CHECK_FALSE(net.vlr(kM1).tier1().contains(kA));
  REQUIRE(net.vlr(kM1).tier2_find(kA) != nullptr);
  CHECK(net.vlr(kM1).tier2_find(kA)->stats.total_visits == 1);
  MessageLog on;
  CHECK(intelligent_register(net, kA, kHome, 200, on) == IntelligentOutcome::Tier2HitPromoted);
  CHECK(count(on, MessageKind::CancelOld) == 0);
}
