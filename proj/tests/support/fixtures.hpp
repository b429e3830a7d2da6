#pragma once

#include <sstream>
#include <string>

#include "gsmloc/network.hpp"
#include "gsmloc/trace.hpp"

namespace gsmloc::testing {

inline NetworkTopology topology_of(const std::string& text) {
  std::istringstream in(text);
  return build_topology(parse_topology_spec(in));
}

inline Trace trace_of(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

inline NetworkTopology commuter_topology() {
  return topology_of(
      "c_nellore_1, la_nellore, msc_nellore\n"
      "c_podalakur_1, la_podalakur, msc_podalakur\n"
      "c_rajampet_1, la_rajampet, msc_rajampet\n");
}

inline CommuterParams commuter_params() {
  CommuterParams p;
  p.home_la = LaId("la_nellore");
  p.transit_las = {LaId("la_podalakur")};
  p.work_la = LaId("la_rajampet");
  return p;
}

inline const MscId kTransitMsc{"msc_podalakur"};

}  // namespace gsmloc::testing
