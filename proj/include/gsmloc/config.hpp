#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string_view>

#include "gsmloc/simulator.hpp"
#include "gsmloc/trace.hpp"

namespace gsmloc {

/// Everything one CLI invocation needs. Built from a flat `key = value` file.
struct RunConfig {
  std::optional<std::filesystem::path> topology;
  std::optional<std::filesystem::path> trace;
  std::optional<CommuterParams> generator;
  Scheme scheme = Scheme::Baseline;
  SimOptions sim;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> output;
  bool verbose_log = false;
};

/// Applies one setting. Relative paths are resolved against `base_dir`.
/// Throws Config.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir = {});

/// Throws Config with the line number of the bad entry.
RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir = {});
/// Throws Io when the file is missing, Config on bad content.
RunConfig load_run_config(const std::filesystem::path& path);

/// Checks cross-field rules: a topology, exactly one of trace file or
/// generator parameters, window of at least one day. Throws Config.
void validate_run_config(const RunConfig& config);

/// Trace named by the config: loaded from file or generated.
Trace resolve_trace(const RunConfig& config, const NetworkTopology& topology);

}  // namespace gsmloc
