/*
 * C interface to the gsmloc location-management simulator.
 *
 * Objects are opaque handles created by *_load / *_new / *_generate
 * functions and released with the matching *_free. Every fallible call
 * returns a gsmloc_status; on failure gsmloc_last_error() describes the
 * problem for the calling thread until its next library call.
 */
#ifndef GSMLOC_GSMLOC_H
#define GSMLOC_GSMLOC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GSMLOC_BUILDING_LIBRARY)
#    define GSMLOC_API __declspec(dllexport)
#  else
#    define GSMLOC_API __declspec(dllimport)
#  endif
#else
#  define GSMLOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsmloc_status {
  GSMLOC_OK = 0,
  GSMLOC_E_INVALID_ARGUMENT = 1,
  GSMLOC_E_IO = 2,
  GSMLOC_E_PARSE = 3,
  GSMLOC_E_CONFIG = 4,
  GSMLOC_E_DUPLICATE_CELL = 5,
  GSMLOC_E_ORPHAN_LA = 6,
  GSMLOC_E_CONFLICTING_LA = 7,
  GSMLOC_E_EMPTY_TOPOLOGY = 8,
  GSMLOC_E_UNKNOWN_IMSI = 9,
  GSMLOC_E_UNKNOWN_CELL = 10,
  GSMLOC_E_UNKNOWN_LA = 11,
  GSMLOC_E_LA_MISMATCH = 12,
  GSMLOC_E_CALLEE_DETACHED = 13,
  GSMLOC_E_CALLER_DETACHED = 14,
  GSMLOC_E_NOT_REGISTERED_HERE = 15,
  GSMLOC_E_NO_BRANCH_MATCHES = 16,
  GSMLOC_E_EMPTY_INPUT = 17,
  GSMLOC_E_EMPTY_WINDOW = 18,
  GSMLOC_E_DAY_OUT_OF_WINDOW = 19,
  GSMLOC_E_TRACE_OUT_OF_ORDER = 20,
  GSMLOC_E_UNRESOLVABLE_ID = 21,
  GSMLOC_E_DOMINANCE_VIOLATED = 22,
  GSMLOC_E_BUFFER_TOO_SMALL = 23,
  GSMLOC_E_INTERNAL = 99
} gsmloc_status;

typedef enum gsmloc_scheme { GSMLOC_SCHEME_BASELINE = 0, GSMLOC_SCHEME_INTELLIGENT = 1 } gsmloc_scheme;

typedef enum gsmloc_fuzzy_set { GSMLOC_FUZZY_OBSERVATION = 0, GSMLOC_FUZZY_WEEKLY = 1 } gsmloc_fuzzy_set;

typedef struct gsmloc_config gsmloc_config;
typedef struct gsmloc_topology gsmloc_topology;
typedef struct gsmloc_trace gsmloc_trace;
typedef struct gsmloc_result gsmloc_result;
typedef struct gsmloc_comparison gsmloc_comparison;
typedef struct gsmloc_fuzzy_spec gsmloc_fuzzy_spec;

GSMLOC_API const char* gsmloc_version(void);
GSMLOC_API const char* gsmloc_last_error(void);
GSMLOC_API const char* gsmloc_status_name(gsmloc_status status);
/* Nonzero for statuses a CLI should report as usage/config errors. */
GSMLOC_API int gsmloc_status_is_usage_error(gsmloc_status status);

/* ---- run configuration ------------------------------------------------ */
GSMLOC_API gsmloc_status gsmloc_config_new(gsmloc_config** out);
GSMLOC_API gsmloc_status gsmloc_config_load(const char* path, gsmloc_config** out);
/* Same keys as the `key = value` file. */
GSMLOC_API gsmloc_status gsmloc_config_set(gsmloc_config* cfg, const char* key, const char* value);
/* Cross-field checks (topology present, exactly one trace source, ...). */
GSMLOC_API gsmloc_status gsmloc_config_validate(const gsmloc_config* cfg);
GSMLOC_API gsmloc_scheme gsmloc_config_scheme(const gsmloc_config* cfg);
GSMLOC_API int gsmloc_config_verbose_log(const gsmloc_config* cfg);
/* Configured output path or NULL. Owned by cfg. */
GSMLOC_API const char* gsmloc_config_output(const gsmloc_config* cfg);
GSMLOC_API const char* gsmloc_config_topology_path(const gsmloc_config* cfg);
GSMLOC_API const char* gsmloc_config_trace_path(const gsmloc_config* cfg);
GSMLOC_API void gsmloc_config_free(gsmloc_config* cfg);

/* ---- topology ---------------------------------------------------------- */
GSMLOC_API gsmloc_status gsmloc_topology_load(const char* path, gsmloc_topology** out);
/* `text` holds the file contents: one `cell_id, la_id, msc_id` per line. */
GSMLOC_API gsmloc_status gsmloc_topology_parse(const char* text, gsmloc_topology** out);
GSMLOC_API size_t gsmloc_topology_cell_count(const gsmloc_topology* topo);
GSMLOC_API size_t gsmloc_topology_la_count(const gsmloc_topology* topo);
GSMLOC_API size_t gsmloc_topology_msc_count(const gsmloc_topology* topo);
GSMLOC_API void gsmloc_topology_free(gsmloc_topology* topo);

/* ---- traces ------------------------------------------------------------ */
GSMLOC_API gsmloc_status gsmloc_trace_load(const char* path, gsmloc_trace** out);
GSMLOC_API gsmloc_status gsmloc_trace_parse(const char* text, gsmloc_trace** out);
/* Loads the configured trace file or runs the configured commuter generator. */
GSMLOC_API gsmloc_status gsmloc_trace_from_config(const gsmloc_config* cfg, const gsmloc_topology* topo,
                                                  gsmloc_trace** out);
GSMLOC_API gsmloc_status gsmloc_trace_save(const gsmloc_trace* trace, const char* path);
GSMLOC_API size_t gsmloc_trace_size(const gsmloc_trace* trace);
/* Number of events of the given kind ("move", "call", "on", "off") whose
 * target cell lies in `la` (pass NULL to count all). */
GSMLOC_API size_t gsmloc_trace_count(const gsmloc_trace* trace, const gsmloc_topology* topo, const char* kind,
                                     const char* la);
GSMLOC_API gsmloc_status gsmloc_trace_validate(const gsmloc_trace* trace, const gsmloc_topology* topo);
GSMLOC_API void gsmloc_trace_free(gsmloc_trace* trace);

/* ---- simulation -------------------------------------------------------- */
GSMLOC_API gsmloc_status gsmloc_simulate(const gsmloc_topology* topo, const gsmloc_trace* trace,
                                         const gsmloc_config* cfg, gsmloc_scheme scheme, gsmloc_result** out);
/* Counter by name (e.g. "hlr_profile_requests"); msc NULL for run totals. */
GSMLOC_API gsmloc_status gsmloc_result_counter(const gsmloc_result* result, const char* counter, const char* msc,
                                               uint64_t* value);
GSMLOC_API size_t gsmloc_result_message_count(const gsmloc_result* result);
GSMLOC_API gsmloc_status gsmloc_result_write_metrics(const gsmloc_result* result, const char* path);
GSMLOC_API gsmloc_status gsmloc_result_write_log(const gsmloc_result* result, const char* path);
GSMLOC_API void gsmloc_result_free(gsmloc_result* result);

GSMLOC_API gsmloc_status gsmloc_compare(const gsmloc_topology* topo, const gsmloc_trace* trace,
                                        const gsmloc_config* cfg, gsmloc_comparison** out);
GSMLOC_API int gsmloc_comparison_dominance_holds(const gsmloc_comparison* cmp);
GSMLOC_API int gsmloc_comparison_routing_equivalent(const gsmloc_comparison* cmp);
GSMLOC_API gsmloc_status gsmloc_comparison_counter(const gsmloc_comparison* cmp, gsmloc_scheme scheme,
                                                   const char* counter, const char* msc, uint64_t* value);
GSMLOC_API gsmloc_status gsmloc_comparison_write_csv(const gsmloc_comparison* cmp, const char* path);
/* Copies the plain-text report into buf (NUL-terminated). *needed receives
 * the required size including the terminator; GSMLOC_E_BUFFER_TOO_SMALL is
 * returned when cap is insufficient. buf may be NULL when cap is 0. */
GSMLOC_API gsmloc_status gsmloc_comparison_render_text(const gsmloc_comparison* cmp, char* buf, size_t cap,
                                                       size_t* needed);
GSMLOC_API void gsmloc_comparison_free(gsmloc_comparison* cmp);

/* ---- fuzzy engine ------------------------------------------------------ */
GSMLOC_API gsmloc_status gsmloc_fuzzy_spec_builtin(gsmloc_fuzzy_set which, gsmloc_fuzzy_spec** out);
GSMLOC_API gsmloc_status gsmloc_fuzzy_spec_load(const char* path, gsmloc_fuzzy_spec** out);
GSMLOC_API gsmloc_status gsmloc_fuzzy_spec_save(const gsmloc_fuzzy_spec* spec, const char* path);
/* label: "Low", "Medium" or "High". */
GSMLOC_API gsmloc_status gsmloc_fuzzy_eval(const gsmloc_fuzzy_spec* spec, const char* label, uint64_t visits,
                                           double* degree);
/* Label with the largest membership at `visits` (higher label on ties). */
GSMLOC_API gsmloc_status gsmloc_fuzzy_strongest(const gsmloc_fuzzy_spec* spec, uint64_t visits,
                                                const char** label);
GSMLOC_API void gsmloc_fuzzy_spec_free(gsmloc_fuzzy_spec* spec);
/* Crisp weekly classification of a visit total under the config's
 * thresholds (cfg may be NULL for defaults). Returned string is static. */
GSMLOC_API gsmloc_status gsmloc_classify_visits(const gsmloc_config* cfg, uint64_t total_visits,
                                                const char** label);

#ifdef __cplusplus
}
#endif

#endif /* GSMLOC_GSMLOC_H */
