#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "gsmloc/gsmloc.h"

namespace {

const std::string kData = GSMLOC_DATA_DIR;

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(gsmloc_version()) > 0);
  CHECK(std::string(gsmloc_status_name(GSMLOC_OK)) == "ok");
  CHECK(gsmloc_status_is_usage_error(GSMLOC_E_CONFIG));
  CHECK_FALSE(gsmloc_status_is_usage_error(GSMLOC_E_IO));
}

TEST_CASE("null arguments are rejected") {
  CHECK(gsmloc_config_new(nullptr) == GSMLOC_E_INVALID_ARGUMENT);
  CHECK(std::strlen(gsmloc_last_error()) > 0);
  gsmloc_topology* topo = nullptr;
  CHECK(gsmloc_topology_parse(nullptr, &topo) == GSMLOC_E_INVALID_ARGUMENT);
  CHECK(topo == nullptr);
  gsmloc_topology_free(nullptr);
  gsmloc_config_free(nullptr);
}

TEST_CASE("topology errors map to status codes") {
  gsmloc_topology* topo = nullptr;
  CHECK(gsmloc_topology_parse("c1, la1, msc1\nc1, la2, msc1\n", &topo) == GSMLOC_E_DUPLICATE_CELL);
  CHECK(std::string(gsmloc_last_error()).find("line 2") != std::string::npos);
  CHECK(gsmloc_topology_load("/nonexistent/topo.txt", &topo) == GSMLOC_E_IO);
  CHECK(std::string(gsmloc_last_error()).find("/nonexistent/topo.txt") != std::string::npos);
  REQUIRE(gsmloc_topology_parse("c1, la1, msc1\nc2, la2, msc2\n", &topo) == GSMLOC_OK);
  CHECK(gsmloc_topology_cell_count(topo) == 2);
  CHECK(gsmloc_topology_msc_count(topo) == 2);
  gsmloc_topology_free(topo);
}

TEST_CASE("commuter comparison through the C interface") {
  gsmloc_config* cfg = nullptr;
  REQUIRE(gsmloc_config_load((kData + "/commuter.conf").c_str(), &cfg) == GSMLOC_OK);
  REQUIRE(gsmloc_config_validate(cfg) == GSMLOC_OK);
  gsmloc_topology* topo = nullptr;
  REQUIRE(gsmloc_topology_load(gsmloc_config_topology_path(cfg), &topo) == GSMLOC_OK);
  gsmloc_trace* trace = nullptr;
  REQUIRE(gsmloc_trace_from_config(cfg, topo, &trace) == GSMLOC_OK);
  CHECK(gsmloc_trace_count(trace, topo, "move", "la_podalakur") == 7);

  gsmloc_comparison* cmp = nullptr;
  REQUIRE(gsmloc_compare(topo, trace, cfg, &cmp) == GSMLOC_OK);
  CHECK(gsmloc_comparison_dominance_holds(cmp));
  CHECK(gsmloc_comparison_routing_equivalent(cmp));
  uint64_t b = 0, i = 0;
  CHECK(gsmloc_comparison_counter(cmp, GSMLOC_SCHEME_BASELINE, "hlr_profile_requests", "msc_podalakur", &b) ==
        GSMLOC_OK);
  CHECK(gsmloc_comparison_counter(cmp, GSMLOC_SCHEME_INTELLIGENT, "hlr_profile_requests", "msc_podalakur", &i) ==
        GSMLOC_OK);
  CHECK(b == 7);
  CHECK(i == 1);
  CHECK(gsmloc_comparison_counter(cmp, GSMLOC_SCHEME_BASELINE, "bogus", nullptr, &b) == GSMLOC_E_INVALID_ARGUMENT);

  size_t needed = 0;
  CHECK(gsmloc_comparison_render_text(cmp, nullptr, 0, &needed) == GSMLOC_E_BUFFER_TOO_SMALL);
  std::vector<char> buf(needed);
  CHECK(gsmloc_comparison_render_text(cmp, buf.data(), buf.size(), &needed) == GSMLOC_OK);
  CHECK(std::string(buf.data()).find("cost dominance") != std::string::npos);

  gsmloc_comparison_free(cmp);
  gsmloc_trace_free(trace);
  gsmloc_topology_free(topo);
  gsmloc_config_free(cfg);
}

TEST_CASE("simulate and write outputs") {
  gsmloc_config* cfg = nullptr;
  REQUIRE(gsmloc_config_load((kData + "/sample.conf").c_str(), &cfg) == GSMLOC_OK);
  gsmloc_topology* topo = nullptr;
  REQUIRE(gsmloc_topology_load(gsmloc_config_topology_path(cfg), &topo) == GSMLOC_OK);
  gsmloc_trace* trace = nullptr;
  REQUIRE(gsmloc_trace_from_config(cfg, topo, &trace) == GSMLOC_OK);
  CHECK(gsmloc_trace_validate(trace, topo) == GSMLOC_OK);
  gsmloc_result* res = nullptr;
  REQUIRE(gsmloc_simulate(topo, trace, cfg, GSMLOC_SCHEME_BASELINE, &res) == GSMLOC_OK);
  CHECK(gsmloc_result_message_count(res) > 0);
  uint64_t delivered = 0, failed = 0;
  CHECK(gsmloc_result_counter(res, "calls_delivered", nullptr, &delivered) == GSMLOC_OK);
  CHECK(gsmloc_result_counter(res, "calls_failed", nullptr, &failed) == GSMLOC_OK);
  CHECK(delivered + failed == gsmloc_trace_count(trace, topo, "call", nullptr));

  const auto dir = std::filesystem::temp_directory_path();
  const auto metrics = (dir / "gsmloc_capi_metrics.csv").string();
  const auto log = (dir / "gsmloc_capi_log.csv").string();
  CHECK(gsmloc_result_write_metrics(res, metrics.c_str()) == GSMLOC_OK);
  CHECK(gsmloc_result_write_log(res, log.c_str()) == GSMLOC_OK);
  CHECK(std::filesystem::file_size(metrics) > 0);
  CHECK(gsmloc_result_write_metrics(res, "/nonexistent/dir/m.csv") == GSMLOC_E_IO);
  std::filesystem::remove(metrics);
  std::filesystem::remove(log);

  gsmloc_result_free(res);
  gsmloc_trace_free(trace);
  gsmloc_topology_free(topo);
  gsmloc_config_free(cfg);
}

TEST_CASE("config setters") {
  gsmloc_config* cfg = nullptr;
  REQUIRE(gsmloc_config_new(&cfg) == GSMLOC_OK);
  CHECK(gsmloc_config_validate(cfg) == GSMLOC_E_CONFIG);
  CHECK(gsmloc_config_set(cfg, "scheme", "intelligent") == GSMLOC_OK);
  CHECK(gsmloc_config_scheme(cfg) == GSMLOC_SCHEME_INTELLIGENT);
  CHECK(gsmloc_config_set(cfg, "scheme", "fast") == GSMLOC_E_CONFIG);
  CHECK(gsmloc_config_set(cfg, "colour", "blue") == GSMLOC_E_CONFIG);
  CHECK(gsmloc_config_output(cfg) == nullptr);
  CHECK(gsmloc_config_set(cfg, "output", "out.csv") == GSMLOC_OK);
  CHECK(std::string(gsmloc_config_output(cfg)) == "out.csv");
  gsmloc_config_free(cfg);
}

TEST_CASE("fuzzy evaluation") {
  gsmloc_fuzzy_spec* spec = nullptr;
  REQUIRE(gsmloc_fuzzy_spec_builtin(GSMLOC_FUZZY_OBSERVATION, &spec) == GSMLOC_OK);
  double d = 0;
  CHECK(gsmloc_fuzzy_eval(spec, "Low", 5, &d) == GSMLOC_OK);
  CHECK(d == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(gsmloc_fuzzy_eval(spec, "High", 17, &d) == GSMLOC_OK);
  CHECK(d == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(gsmloc_fuzzy_eval(spec, "Often", 17, &d) == GSMLOC_E_INVALID_ARGUMENT);
  const char* label = nullptr;
  CHECK(gsmloc_fuzzy_strongest(spec, 19, &label) == GSMLOC_OK);
  CHECK(std::string(label) == "High");

  const auto path = (std::filesystem::temp_directory_path() / "gsmloc_capi_spec.txt").string();
  CHECK(gsmloc_fuzzy_spec_save(spec, path.c_str()) == GSMLOC_OK);
  gsmloc_fuzzy_spec* back = nullptr;
  REQUIRE(gsmloc_fuzzy_spec_load(path.c_str(), &back) == GSMLOC_OK);
  CHECK(gsmloc_fuzzy_eval(back, "Medium", 12, &d) == GSMLOC_OK);
  CHECK(d == doctest::Approx(0.4).epsilon(1e-12));
  std::filesystem::remove(path);
  gsmloc_fuzzy_spec_free(back);
  gsmloc_fuzzy_spec_free(spec);

  CHECK(gsmloc_classify_visits(nullptr, 4, &label) == GSMLOC_OK);
  CHECK(std::string(label) == "Medium");
  CHECK(gsmloc_classify_visits(nullptr, 16, &label) == GSMLOC_OK);
  CHECK(std::string(label) == "High");
}
