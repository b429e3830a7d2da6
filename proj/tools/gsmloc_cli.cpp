// Command-line front end. Talks to the simulator only through the C API.
//
// Exit status: 0 success, 1 runtime/domain error, 2 usage or config error.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsmloc/gsmloc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Config = std::unique_ptr<gsmloc_config, Deleter<gsmloc_config, gsmloc_config_free>>;
using Topology = std::unique_ptr<gsmloc_topology, Deleter<gsmloc_topology, gsmloc_topology_free>>;
using Trace = std::unique_ptr<gsmloc_trace, Deleter<gsmloc_trace, gsmloc_trace_free>>;
using Result = std::unique_ptr<gsmloc_result, Deleter<gsmloc_result, gsmloc_result_free>>;
using Comparison = std::unique_ptr<gsmloc_comparison, Deleter<gsmloc_comparison, gsmloc_comparison_free>>;
using FuzzySpec = std::unique_ptr<gsmloc_fuzzy_spec, Deleter<gsmloc_fuzzy_spec, gsmloc_fuzzy_spec_free>>;

void check(gsmloc_status status, bool usage = false) {
  if (status == GSMLOC_OK) return;
  std::fprintf(stderr, "gsmloc: %s\n", gsmloc_last_error());
  throw Failure{usage || gsmloc_status_is_usage_error(status) ? kExitUsage : kExitRuntime};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::fprintf(stderr, "gsmloc: %s\n", message.c_str());
  throw Failure{kExitUsage};
}

struct CommonOptions {
  std::string config;
  std::string scheme;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool verbose_log = false;
  std::vector<std::string> settings;
};

Config load_config(const CommonOptions& opts) {
  gsmloc_config* raw = nullptr;
  if (opts.config.empty())
    check(gsmloc_config_new(&raw));
  else
    check(gsmloc_config_load(opts.config.c_str(), &raw), /*usage=*/true);
  Config cfg(raw);
  if (!opts.scheme.empty()) check(gsmloc_config_set(cfg.get(), "scheme", opts.scheme.c_str()), true);
  if (opts.seed) check(gsmloc_config_set(cfg.get(), "seed", std::to_string(*opts.seed).c_str()), true);
  if (opts.verbose_log) check(gsmloc_config_set(cfg.get(), "verbose_log", "true"), true);
  if (!opts.out.empty()) check(gsmloc_config_set(cfg.get(), "output", opts.out.c_str()), true);
  for (const auto& kv : opts.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) usage_error("--set expects key=value, got '" + kv + "'");
    check(gsmloc_config_set(cfg.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()), true);
  }
  return cfg;
}

Topology load_topology(const gsmloc_config* cfg) {
  const char* path = gsmloc_config_topology_path(cfg);
  if (path == nullptr) usage_error("no topology configured");
  gsmloc_topology* raw = nullptr;
  check(gsmloc_topology_load(path, &raw));
  return Topology(raw);
}

Trace resolve_trace(const gsmloc_config* cfg, const gsmloc_topology* topo) {
  gsmloc_trace* raw = nullptr;
  check(gsmloc_trace_from_config(cfg, topo, &raw));
  return Trace(raw);
}

std::string output_path(const gsmloc_config* cfg) {
  const char* out = gsmloc_config_output(cfg);
  if (out == nullptr) usage_error("no output path; pass --out or set 'output' in the config");
  return out;
}

int cmd_simulate(const CommonOptions& opts) {
  auto cfg = load_config(opts);
  check(gsmloc_config_validate(cfg.get()), true);
  const auto out = output_path(cfg.get());
  auto topo = load_topology(cfg.get());
  auto trace = resolve_trace(cfg.get(), topo.get());
  gsmloc_result* raw = nullptr;
  check(gsmloc_simulate(topo.get(), trace.get(), cfg.get(), gsmloc_config_scheme(cfg.get()), &raw));
  Result result(raw);
  check(gsmloc_result_write_metrics(result.get(), out.c_str()));
  if (gsmloc_config_verbose_log(cfg.get())) {
    const auto log_path = out + ".log.csv";
    check(gsmloc_result_write_log(result.get(), log_path.c_str()));
  }
  std::uint64_t profile = 0, location = 0;
  check(gsmloc_result_counter(result.get(), "hlr_profile_requests", nullptr, &profile));
  check(gsmloc_result_counter(result.get(), "hlr_location_requests", nullptr, &location));
  std::printf("%s: %zu events, %zu messages, %llu HLR profile requests, %llu HLR location requests -> %s\n",
              gsmloc_config_scheme(cfg.get()) == GSMLOC_SCHEME_INTELLIGENT ? "intelligent" : "baseline",
              gsmloc_trace_size(trace.get()), gsmloc_result_message_count(result.get()),
              static_cast<unsigned long long>(profile), static_cast<unsigned long long>(location), out.c_str());
  return kExitOk;
}

int cmd_compare(const CommonOptions& opts) {
  auto cfg = load_config(opts);
  check(gsmloc_config_validate(cfg.get()), true);
  auto topo = load_topology(cfg.get());
  auto trace = resolve_trace(cfg.get(), topo.get());
  gsmloc_comparison* raw = nullptr;
  check(gsmloc_compare(topo.get(), trace.get(), cfg.get(), &raw));
  Comparison cmp(raw);

  std::size_t needed = 0;
  gsmloc_comparison_render_text(cmp.get(), nullptr, 0, &needed);
  std::vector<char> text(needed);
  check(gsmloc_comparison_render_text(cmp.get(), text.data(), text.size(), &needed));
  std::fputs(text.data(), stdout);

  if (const char* out = gsmloc_config_output(cfg.get())) check(gsmloc_comparison_write_csv(cmp.get(), out));

  if (!gsmloc_comparison_dominance_holds(cmp.get()) || !gsmloc_comparison_routing_equivalent(cmp.get())) {
    std::fprintf(stderr, "gsmloc: intelligent scheme failed the dominance/routing checks\n");
    return kExitRuntime;
  }
  return kExitOk;
}

struct FuzzyOptions {
  std::string set = "observation";
  std::string label;
  std::uint64_t visits = 0;
  std::string spec_file;
  std::string config;
};

int cmd_fuzzy_eval(const FuzzyOptions& opts) {
  gsmloc_fuzzy_spec* raw = nullptr;
  const bool weekly = opts.set == "weekly";
  if (!weekly && opts.set != "observation") usage_error("--set must be 'observation' or 'weekly'");
  if (!opts.spec_file.empty())
    check(gsmloc_fuzzy_spec_load(opts.spec_file.c_str(), &raw));
  else
    check(gsmloc_fuzzy_spec_builtin(weekly ? GSMLOC_FUZZY_WEEKLY : GSMLOC_FUZZY_OBSERVATION, &raw));
  FuzzySpec spec(raw);

  std::vector<std::string> labels;
  if (opts.label.empty())
    labels = {"Low", "Medium", "High"};
  else
    labels = {opts.label};
  for (const auto& label : labels) {
    double degree = 0;
    check(gsmloc_fuzzy_eval(spec.get(), label.c_str(), opts.visits, &degree), /*usage=*/false);
    std::printf("%s %.6f\n", label.c_str(), degree);
  }

  const char* crisp = nullptr;
  if (weekly) {
    CommonOptions common;
    common.config = opts.config;
    auto cfg = load_config(common);
    check(gsmloc_classify_visits(cfg.get(), opts.visits, &crisp));
  } else {
    check(gsmloc_fuzzy_strongest(spec.get(), opts.visits, &crisp));
  }
  std::printf("class %s\n", crisp);
  return kExitOk;
}

struct TraceGenOptions {
  CommonOptions common;
  std::optional<std::uint32_t> days;
  std::optional<std::uint32_t> population;
  std::string leave;
  std::string ret;
};

int cmd_trace_gen(const TraceGenOptions& opts) {
  auto cfg = load_config(opts.common);
  if (gsmloc_config_trace_path(cfg.get()) != nullptr) usage_error("trace-gen needs generator settings, not a trace file");
  if (opts.days) check(gsmloc_config_set(cfg.get(), "days", std::to_string(*opts.days).c_str()), true);
  if (opts.population) check(gsmloc_config_set(cfg.get(), "population", std::to_string(*opts.population).c_str()), true);
  if (!opts.leave.empty()) check(gsmloc_config_set(cfg.get(), "leave_time", opts.leave.c_str()), true);
  if (!opts.ret.empty()) check(gsmloc_config_set(cfg.get(), "return_time", opts.ret.c_str()), true);
  check(gsmloc_config_validate(cfg.get()), true);
  const auto out = output_path(cfg.get());
  auto topo = load_topology(cfg.get());
  gsmloc_trace* raw = nullptr;
  const auto status = gsmloc_trace_from_config(cfg.get(), topo.get(), &raw);
  check(status, status == GSMLOC_E_CONFIG);
  Trace trace(raw);
  check(gsmloc_trace_save(trace.get(), out.c_str()));
  std::printf("wrote %zu events to %s\n", gsmloc_trace_size(trace.get()), out.c_str());
  return kExitOk;
}

struct ValidateOptions {
  std::string config;
  std::string topology;
  std::string trace;
};

int cmd_validate(const ValidateOptions& opts) {
  std::string topology_path = opts.topology;
  std::string trace_path = opts.trace;
  Config cfg;
  if (!opts.config.empty()) {
    CommonOptions common;
    common.config = opts.config;
    cfg = load_config(common);
    if (topology_path.empty() && gsmloc_config_topology_path(cfg.get()))
      topology_path = gsmloc_config_topology_path(cfg.get());
    if (trace_path.empty() && gsmloc_config_trace_path(cfg.get())) trace_path = gsmloc_config_trace_path(cfg.get());
  }
  if (topology_path.empty()) usage_error("validate needs --topology or a config naming one");
  gsmloc_topology* raw_topo = nullptr;
  check(gsmloc_topology_load(topology_path.c_str(), &raw_topo));
  Topology topo(raw_topo);
  std::printf("topology %s: %zu cells, %zu location areas, %zu MSCs\n", topology_path.c_str(),
              gsmloc_topology_cell_count(topo.get()), gsmloc_topology_la_count(topo.get()),
              gsmloc_topology_msc_count(topo.get()));
  if (!trace_path.empty()) {
    gsmloc_trace* raw_trace = nullptr;
    check(gsmloc_trace_load(trace_path.c_str(), &raw_trace));
    Trace trace(raw_trace);
    check(gsmloc_trace_validate(trace.get(), topo.get()));
    std::printf("trace %s: %zu events\n", trace_path.c_str(), gsmloc_trace_size(trace.get()));
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_scheme) {
  cmd->add_option("--config", opts.config, "run configuration file (key = value)");
  if (with_scheme)
    cmd->add_option("--scheme", opts.scheme, "baseline or intelligent")
        ->check(CLI::IsMember({"baseline", "intelligent"}));
  cmd->add_option("--seed", opts.seed, "seed for generated traces");
  cmd->add_option("--out", opts.out, "output path");
  cmd->add_option("--set", opts.settings, "override a config setting, key=value (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GSM location management simulator: standard HLR/VLR procedures vs. a fuzzy two-tier VLR cache"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gsmloc_version()));

  CommonOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "run one scheme and write a metrics file");
  add_common(simulate, sim_opts, true);
  simulate->add_flag("--verbose-log", sim_opts.verbose_log, "also write the message log to <out>.log.csv");

  CommonOptions cmp_opts;
  auto* compare = app.add_subcommand("compare", "run both schemes on one trace and report the differences");
  add_common(compare, cmp_opts, false);

  FuzzyOptions fz;
  auto* fuzzy = app.add_subcommand("fuzzy-eval", "evaluate the visit-count membership functions");
  fuzzy->add_option("--set", fz.set, "observation ([0,20]) or weekly ([0,7])")
      ->check(CLI::IsMember({"observation", "weekly"}));
  fuzzy->add_option("--label", fz.label, "Low, Medium or High (default: all three)");
  fuzzy->add_option("--visits", fz.visits, "visit count")->required();
  fuzzy->add_option("--spec-file", fz.spec_file, "membership functions to use instead of the built-in set");
  fuzzy->add_option("--config", fz.config, "configuration holding classification thresholds");

  TraceGenOptions tg;
  auto* trace_gen = app.add_subcommand("trace-gen", "write a commuter mobility trace");
  add_common(trace_gen, tg.common, false);
  trace_gen->add_option("--days", tg.days, "number of days");
  trace_gen->add_option("--population", tg.population, "number of commuters");
  trace_gen->add_option("--leave", tg.leave, "morning departure HH:MM");
  trace_gen->add_option("--return", tg.ret, "evening return HH:MM");

  ValidateOptions val;
  auto* validate = app.add_subcommand("validate", "lint a topology and optionally a trace");
  validate->add_option("--config", val.config, "run configuration naming the files");
  validate->add_option("--topology", val.topology, "topology file");
  validate->add_option("--trace", val.trace, "trace file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim_opts);
    if (*compare) return cmd_compare(cmp_opts);
    if (*fuzzy) return cmd_fuzzy_eval(fz);
    if (*trace_gen) return cmd_trace_gen(tg);
    if (*validate) return cmd_validate(val);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
