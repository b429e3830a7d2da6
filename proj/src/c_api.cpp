#include "gsmloc/gsmloc.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "gsmloc/config.hpp"
#include "gsmloc/error.hpp"
#include "gsmloc/fuzzy.hpp"
#include "gsmloc/simulator.hpp"

struct gsmloc_config {
  gsmloc::RunConfig value;
  std::string output;
  std::string topology;
  std::string trace;
};
struct gsmloc_topology {
  gsmloc::NetworkTopology value;
};
struct gsmloc_trace {
  gsmloc::Trace value;
};
struct gsmloc_result {
  gsmloc::SimulationResult value;
};
struct gsmloc_comparison {
  gsmloc::Comparison value;
};
struct gsmloc_fuzzy_spec {
  gsmloc::FuzzySetSpec value;
};

namespace {

thread_local std::string g_last_error;

gsmloc_status to_status(gsmloc::ErrorCode code) {
  using gsmloc::ErrorCode;
  switch (code) {
    case ErrorCode::DuplicateCell: return GSMLOC_E_DUPLICATE_CELL;
    case ErrorCode::OrphanLa: return GSMLOC_E_ORPHAN_LA;
    case ErrorCode::ConflictingLa: return GSMLOC_E_CONFLICTING_LA;
    case ErrorCode::EmptyTopology: return GSMLOC_E_EMPTY_TOPOLOGY;
    case ErrorCode::UnknownImsi: return GSMLOC_E_UNKNOWN_IMSI;
    case ErrorCode::UnknownCell: return GSMLOC_E_UNKNOWN_CELL;
    case ErrorCode::UnknownLa: return GSMLOC_E_UNKNOWN_LA;
    case ErrorCode::LaMismatch: return GSMLOC_E_LA_MISMATCH;
    case ErrorCode::CalleeDetached: return GSMLOC_E_CALLEE_DETACHED;
    case ErrorCode::CallerDetached: return GSMLOC_E_CALLER_DETACHED;
    case ErrorCode::NotRegisteredHere: return GSMLOC_E_NOT_REGISTERED_HERE;
    case ErrorCode::NoBranchMatches: return GSMLOC_E_NO_BRANCH_MATCHES;
    case ErrorCode::EmptyInput: return GSMLOC_E_EMPTY_INPUT;
    case ErrorCode::EmptyWindow: return GSMLOC_E_EMPTY_WINDOW;
    case ErrorCode::DayOutOfWindow: return GSMLOC_E_DAY_OUT_OF_WINDOW;
    case ErrorCode::TraceOutOfOrder: return GSMLOC_E_TRACE_OUT_OF_ORDER;
    case ErrorCode::UnresolvableId: return GSMLOC_E_UNRESOLVABLE_ID;
    case ErrorCode::Parse: return GSMLOC_E_PARSE;
    case ErrorCode::Config: return GSMLOC_E_CONFIG;
    case ErrorCode::Io: return GSMLOC_E_IO;
    case ErrorCode::DominanceViolated: return GSMLOC_E_DOMINANCE_VIOLATED;
  }
  return GSMLOC_E_INTERNAL;
}

gsmloc_status fail(gsmloc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class F>
gsmloc_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return GSMLOC_OK;
  } catch (const gsmloc::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GSMLOC_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GSMLOC_E_INTERNAL, e.what());
  }
}

#define GSMLOC_REQUIRE(cond)                                                          \
  do {                                                                                \
    if (!(cond)) return fail(GSMLOC_E_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

const gsmloc::Counters* counters_for(const gsmloc::Metrics& m, const char* msc) {
  if (msc == nullptr) return &m.total;
  const auto it = m.per_msc.find(gsmloc::MscId(msc));
  return it == m.per_msc.end() ? nullptr : &it->second;
}

gsmloc_status read_counter(const gsmloc::Metrics& m, const char* counter, const char* msc, uint64_t* value) {
  const auto c = gsmloc::parse_counter(counter);
  if (!c) return fail(GSMLOC_E_INVALID_ARGUMENT, std::string("unknown counter '") + counter + "'");
  const auto* counters = counters_for(m, msc);
  if (counters == nullptr) return fail(GSMLOC_E_UNRESOLVABLE_ID, std::string("unknown MSC '") + msc + "'");
  *value = (*counters)[*c];
  return GSMLOC_OK;
}

template <class Writer>
void write_file(const char* path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gsmloc::Error(gsmloc::ErrorCode::Io, std::string("cannot write '") + path + "'");
  writer(out);
  out.flush();
  if (!out) throw gsmloc::Error(gsmloc::ErrorCode::Io, std::string("failed writing '") + path + "'");
}

void sync_paths(gsmloc_config* cfg) {
  cfg->output = cfg->value.output ? cfg->value.output->string() : std::string();
  cfg->topology = cfg->value.topology ? cfg->value.topology->string() : std::string();
  cfg->trace = cfg->value.trace ? cfg->value.trace->string() : std::string();
}

gsmloc::SimOptions options_of(const gsmloc_config* cfg) { return cfg ? cfg->value.sim : gsmloc::SimOptions{}; }

}  // namespace

extern "C" {

const char* gsmloc_version(void) { return "1.0.0"; }

const char* gsmloc_last_error(void) { return g_last_error.c_str(); }

const char* gsmloc_status_name(gsmloc_status status) {
  switch (status) {
    case GSMLOC_OK: return "ok";
    case GSMLOC_E_INVALID_ARGUMENT: return "invalid_argument";
    case GSMLOC_E_BUFFER_TOO_SMALL: return "buffer_too_small";
    case GSMLOC_E_INTERNAL: return "internal";
    default: break;
  }
  for (int code = 0; code <= static_cast<int>(gsmloc::ErrorCode::DominanceViolated); ++code) {
    const auto ec = static_cast<gsmloc::ErrorCode>(code);
    if (to_status(ec) == status) return gsmloc::to_string(ec).data();
  }
  return "unknown";
}

int gsmloc_status_is_usage_error(gsmloc_status status) {
  return status == GSMLOC_E_CONFIG || status == GSMLOC_E_INVALID_ARGUMENT;
}

gsmloc_status gsmloc_config_new(gsmloc_config** out) {
  GSMLOC_REQUIRE(out);
  return guarded([&] { *out = new gsmloc_config{}; });
}

gsmloc_status gsmloc_config_load(const char* path, gsmloc_config** out) {
  GSMLOC_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] {
    auto cfg = std::make_unique<gsmloc_config>();
    cfg->value = gsmloc::load_run_config(path);
    sync_paths(cfg.get());
    *out = cfg.release();
  });
}

gsmloc_status gsmloc_config_set(gsmloc_config* cfg, const char* key, const char* value) {
  GSMLOC_REQUIRE(cfg && key && value);
  return guarded([&] {
    gsmloc::apply_setting(cfg->value, key, value);
    sync_paths(cfg);
  });
}

gsmloc_status gsmloc_config_validate(const gsmloc_config* cfg) {
  GSMLOC_REQUIRE(cfg);
  return guarded([&] { gsmloc::validate_run_config(cfg->value); });
}

gsmloc_scheme gsmloc_config_scheme(const gsmloc_config* cfg) {
  return cfg && cfg->value.scheme == gsmloc::Scheme::Intelligent ? GSMLOC_SCHEME_INTELLIGENT
                                                                 : GSMLOC_SCHEME_BASELINE;
}

int gsmloc_config_verbose_log(const gsmloc_config* cfg) { return cfg && cfg->value.verbose_log ? 1 : 0; }

const char* gsmloc_config_output(const gsmloc_config* cfg) {
  return cfg && !cfg->output.empty() ? cfg->output.c_str() : nullptr;
}

const char* gsmloc_config_topology_path(const gsmloc_config* cfg) {
  return cfg && !cfg->topology.empty() ? cfg->topology.c_str() : nullptr;
}

const char* gsmloc_config_trace_path(const gsmloc_config* cfg) {
  return cfg && !cfg->trace.empty() ? cfg->trace.c_str() : nullptr;
}

void gsmloc_config_free(gsmloc_config* cfg) { delete cfg; }

gsmloc_status gsmloc_topology_load(const char* path, gsmloc_topology** out) {
  GSMLOC_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] { *out = new gsmloc_topology{gsmloc::load_topology(path)}; });
}

gsmloc_status gsmloc_topology_parse(const char* text, gsmloc_topology** out) {
  GSMLOC_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] {
    std::istringstream in(text);
    *out = new gsmloc_topology{gsmloc::build_topology(gsmloc::parse_topology_spec(in))};
  });
}

size_t gsmloc_topology_cell_count(const gsmloc_topology* topo) { return topo ? topo->value.cells().size() : 0; }
size_t gsmloc_topology_la_count(const gsmloc_topology* topo) { return topo ? topo->value.las().size() : 0; }
size_t gsmloc_topology_msc_count(const gsmloc_topology* topo) { return topo ? topo->value.mscs().size() : 0; }
void gsmloc_topology_free(gsmloc_topology* topo) { delete topo; }

gsmloc_status gsmloc_trace_load(const char* path, gsmloc_trace** out) {
  GSMLOC_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] { *out = new gsmloc_trace{gsmloc::load_trace(path)}; });
}

gsmloc_status gsmloc_trace_parse(const char* text, gsmloc_trace** out) {
  GSMLOC_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] {
    std::istringstream in(text);
    *out = new gsmloc_trace{gsmloc::parse_trace(in)};
  });
}

gsmloc_status gsmloc_trace_from_config(const gsmloc_config* cfg, const gsmloc_topology* topo, gsmloc_trace** out) {
  GSMLOC_REQUIRE(cfg && topo && out);
  *out = nullptr;
  return guarded([&] { *out = new gsmloc_trace{gsmloc::resolve_trace(cfg->value, topo->value)}; });
}

gsmloc_status gsmloc_trace_save(const gsmloc_trace* trace, const char* path) {
  GSMLOC_REQUIRE(trace && path);
  return guarded([&] { gsmloc::save_trace(path, trace->value); });
}

size_t gsmloc_trace_size(const gsmloc_trace* trace) { return trace ? trace->value.size() : 0; }

size_t gsmloc_trace_count(const gsmloc_trace* trace, const gsmloc_topology* topo, const char* kind, const char* la) {
  if (trace == nullptr || kind == nullptr) return 0;
  const auto k = gsmloc::parse_event_kind(kind);
  if (!k) return 0;
  size_t n = 0;
  for (const auto& e : trace->value) {
    if (e.kind != *k) continue;
    if (la != nullptr) {
      if (topo == nullptr || (e.kind != gsmloc::EventKind::Move && e.kind != gsmloc::EventKind::PowerOn)) continue;
      const auto it = topo->value.cells().find(e.cell());
      if (it == topo->value.cells().end() || it->second.str() != la) continue;
    }
    ++n;
  }
  return n;
}

gsmloc_status gsmloc_trace_validate(const gsmloc_trace* trace, const gsmloc_topology* topo) {
  GSMLOC_REQUIRE(trace && topo);
  return guarded([&] { gsmloc::validate_trace(trace->value, topo->value); });
}

void gsmloc_trace_free(gsmloc_trace* trace) { delete trace; }

gsmloc_status gsmloc_simulate(const gsmloc_topology* topo, const gsmloc_trace* trace, const gsmloc_config* cfg,
                              gsmloc_scheme scheme, gsmloc_result** out) {
  GSMLOC_REQUIRE(topo && trace && out);
  *out = nullptr;
  return guarded([&] {
    const auto s = scheme == GSMLOC_SCHEME_INTELLIGENT ? gsmloc::Scheme::Intelligent : gsmloc::Scheme::Baseline;
    *out = new gsmloc_result{gsmloc::run_simulation(topo->value, trace->value, s, options_of(cfg))};
  });
}

gsmloc_status gsmloc_result_counter(const gsmloc_result* result, const char* counter, const char* msc,
                                    uint64_t* value) {
  GSMLOC_REQUIRE(result && counter && value);
  g_last_error.clear();
  return read_counter(result->value.metrics, counter, msc, value);
}

size_t gsmloc_result_message_count(const gsmloc_result* result) { return result ? result->value.log.size() : 0; }

gsmloc_status gsmloc_result_write_metrics(const gsmloc_result* result, const char* path) {
  GSMLOC_REQUIRE(result && path);
  return guarded([&] { write_file(path, [&](std::ostream& o) { gsmloc::write_metrics_csv(o, result->value.metrics); }); });
}

gsmloc_status gsmloc_result_write_log(const gsmloc_result* result, const char* path) {
  GSMLOC_REQUIRE(result && path);
  return guarded([&] { write_file(path, [&](std::ostream& o) { gsmloc::write_log_csv(o, result->value.log); }); });
}

void gsmloc_result_free(gsmloc_result* result) { delete result; }

gsmloc_status gsmloc_compare(const gsmloc_topology* topo, const gsmloc_trace* trace, const gsmloc_config* cfg,
                             gsmloc_comparison** out) {
  GSMLOC_REQUIRE(topo && trace && out);
  *out = nullptr;
  return guarded([&] {
    *out = new gsmloc_comparison{gsmloc::compare_schemes(topo->value, trace->value, options_of(cfg))};
  });
}

int gsmloc_comparison_dominance_holds(const gsmloc_comparison* cmp) { return cmp && cmp->value.dominance_holds; }

int gsmloc_comparison_routing_equivalent(const gsmloc_comparison* cmp) {
  return cmp && cmp->value.routing_equivalent;
}

gsmloc_status gsmloc_comparison_counter(const gsmloc_comparison* cmp, gsmloc_scheme scheme, const char* counter,
                                        const char* msc, uint64_t* value) {
  GSMLOC_REQUIRE(cmp && counter && value);
  g_last_error.clear();
  const auto& m = scheme == GSMLOC_SCHEME_INTELLIGENT ? cmp->value.intelligent.metrics : cmp->value.baseline.metrics;
  return read_counter(m, counter, msc, value);
}

gsmloc_status gsmloc_comparison_write_csv(const gsmloc_comparison* cmp, const char* path) {
  GSMLOC_REQUIRE(cmp && path);
  return guarded([&] { write_file(path, [&](std::ostream& o) { gsmloc::write_report_csv(o, cmp->value); }); });
}

gsmloc_status gsmloc_comparison_render_text(const gsmloc_comparison* cmp, char* buf, size_t cap, size_t* needed) {
  GSMLOC_REQUIRE(cmp && needed && (buf || cap == 0));
  g_last_error.clear();
  std::ostringstream out;
  gsmloc::write_report_text(out, cmp->value);
  const auto text = out.str();
  *needed = text.size() + 1;
  if (cap < *needed) return fail(GSMLOC_E_BUFFER_TOO_SMALL, "report buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return GSMLOC_OK;
}

void gsmloc_comparison_free(gsmloc_comparison* cmp) { delete cmp; }

gsmloc_status gsmloc_fuzzy_spec_builtin(gsmloc_fuzzy_set which, gsmloc_fuzzy_spec** out) {
  GSMLOC_REQUIRE(out);
  return guarded([&] {
    *out = new gsmloc_fuzzy_spec{which == GSMLOC_FUZZY_WEEKLY ? gsmloc::weekly_fuzzy_spec()
                                                              : gsmloc::observation_fuzzy_spec()};
  });
}

gsmloc_status gsmloc_fuzzy_spec_load(const char* path, gsmloc_fuzzy_spec** out) {
  GSMLOC_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path);
    if (!in) throw gsmloc::Error(gsmloc::ErrorCode::Io, std::string("cannot open fuzzy spec '") + path + "'");
    *out = new gsmloc_fuzzy_spec{gsmloc::parse_fuzzy_spec(in)};
  });
}

gsmloc_status gsmloc_fuzzy_spec_save(const gsmloc_fuzzy_spec* spec, const char* path) {
  GSMLOC_REQUIRE(spec && path);
  return guarded([&] { write_file(path, [&](std::ostream& o) { gsmloc::write_fuzzy_spec(o, spec->value); }); });
}

gsmloc_status gsmloc_fuzzy_eval(const gsmloc_fuzzy_spec* spec, const char* label, uint64_t visits, double* degree) {
  GSMLOC_REQUIRE(spec && label && degree);
  const auto l = gsmloc::parse_label(label);
  if (!l) return fail(GSMLOC_E_INVALID_ARGUMENT, std::string("unknown label '") + label + "'");
  return guarded([&] { *degree = gsmloc::eval_membership(spec->value[*l], visits); });
}

gsmloc_status gsmloc_fuzzy_strongest(const gsmloc_fuzzy_spec* spec, uint64_t visits, const char** label) {
  GSMLOC_REQUIRE(spec && label);
  return guarded([&] { *label = gsmloc::to_string(gsmloc::strongest_label(spec->value, visits)).data(); });
}

void gsmloc_fuzzy_spec_free(gsmloc_fuzzy_spec* spec) { delete spec; }

gsmloc_status gsmloc_classify_visits(const gsmloc_config* cfg, uint64_t total_visits, const char** label) {
  GSMLOC_REQUIRE(label);
  const auto thresholds = cfg ? cfg->value.sim.tier.thresholds : gsmloc::ClassThresholds{};
  return guarded([&] { *label = gsmloc::to_string(gsmloc::classify_total(total_visits, thresholds)).data(); });
}

}  // extern "C"
