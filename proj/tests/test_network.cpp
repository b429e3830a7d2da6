#include <sstream>

#include "doctest.h"
#include "gsmloc/error.hpp"
#include "gsmloc/network.hpp"

using namespace gsmloc;

namespace {

NetworkTopology topo_from(const std::string& text) {
  std::istringstream in(text);
  return build_topology(parse_topology_spec(in));
}

ErrorCode code_of(const std::string& text) {
  try {
    topo_from(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

const char* kNineCells =
    "# three areas, two switches\n"
    "c1, la1, msc1\nc2, la1, msc1\nc3, la1, msc1\n"
    "c4, la2, msc1\nc5, la2, msc1\nc6, la2, msc1\n"
    "c7, la3, msc2\nc8, la3, msc2\nc9, la3, msc2\n";

}  // namespace

TEST_CASE("single cell topology") {
  const auto t = topo_from("c1, la1, msc1\n");
  CHECK(t.cells().size() == 1);
  CHECK(t.mscs().size() == 1);
  CHECK(t.locate(CellId("c1")).msc == MscId("msc1"));
}

TEST_CASE("nine cells in three areas under two switches") {
  const auto t = topo_from(kNineCells);
  CHECK(t.cells().size() == 9);
  CHECK(t.las().size() == 3);
  CHECK(t.mscs().size() == 2);
  CHECK(t.msc_of(LaId("la2")) == MscId("msc1"));
  CHECK(t.cells_of(LaId("la3")).size() == 3);
  CHECK(t.locate(CellId("c8")).la == LaId("la3"));
}

TEST_CASE("topology errors") {
  CHECK(code_of("") == ErrorCode::EmptyTopology);
  CHECK(code_of("# only comments\n") == ErrorCode::EmptyTopology);
  CHECK(code_of("c1, la1, msc1\nc1, la2, msc1\n") == ErrorCode::DuplicateCell);
  CHECK(code_of("c1, la1,\n") == ErrorCode::OrphanLa);
  CHECK(code_of("c1, la1, msc1\nc2, la1, msc2\n") == ErrorCode::ConflictingLa);
}

TEST_CASE("topology errors carry the line number") {
  try {
    topo_from("c1, la1, msc1\n\nc1, la2, msc1\n");
    FAIL("expected DuplicateCell");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("unknown ids") {
  const auto t = topo_from(kNineCells);
  CHECK_THROWS_AS(t.locate(CellId("c99")), Error);
  CHECK_THROWS_AS(t.msc_of(LaId("la9")), Error);
  CHECK_THROWS_AS(load_topology("/nonexistent/topology.txt"), Error);
}

TEST_CASE("hlr lookup and location updates") {
  Hlr hlr;
  const Imsi a("001010000000001");
  hlr.provision(make_default_profile(a, 0));
  CHECK_FALSE(hlr.lookup(a).serving_vlr.has_value());

  CHECK_FALSE(hlr.update_location(a, MscId("msc1"), LaId("la1")).has_value());
  CHECK(hlr.lookup(a).serving_vlr == MscId("msc1"));
  CHECK(hlr.update_location(a, MscId("msc2"), LaId("la3")) == MscId("msc1"));
  CHECK(hlr.update_location(a, MscId("msc2"), LaId("la3")) == MscId("msc2"));
  CHECK(hlr.lookup(a).current_la == LaId("la3"));

  CHECK(hlr.detach(a) == MscId("msc2"));
  CHECK_FALSE(hlr.lookup(a).serving_vlr.has_value());

  try {
    hlr.lookup(Imsi("999"));
    FAIL("expected UnknownImsi");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownImsi);
  }
}

TEST_CASE("vlr insert, lookup, delete") {
  Vlr v;
  const Imsi a("001010000000001");
  v.insert({make_default_profile(a, 0), LaId("la1"), CellId("c1"), VlrStatus::Idle});
  REQUIRE(v.lookup(a).has_value());
  CHECK(v.lookup(a)->cell == CellId("c1"));
  CHECK_FALSE(v.erase(Imsi("other")));
  CHECK(v.erase(a));
  CHECK_FALSE(v.lookup(a).has_value());
}

TEST_CASE("default profiles and tmsi derivation are deterministic") {
  const Imsi a("001010000000001");
  CHECK(make_default_profile(a, 3) == make_default_profile(a, 3));
  CHECK(make_default_profile(a, 3).imsi == a);
  CHECK(derive_tmsi(a, 1) == derive_tmsi(a, 1));
  CHECK(derive_tmsi(a, 1) != derive_tmsi(a, 2));
  CHECK(derive_tmsi(a, 1).size() == 8);
}
