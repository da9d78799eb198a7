#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace saturate::cli {

/// Exit codes: the check passed, a mathematical check failed, or the input
/// (arguments, files, preconditions) was rejected.
enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

struct RunResult {
  int exit_code = kPass;
  /// {"schema", "tool_version", "command", "inputs_digest", "status",
  ///  "results", "timings_ms"} plus "witness" unless the run passed.
  nlohmann::json report;
};

/// Runs one subcommand; `args` excludes the program name. Never throws.
RunResult dispatch(const std::vector<std::string>& args);

/// 64-bit FNV-1a, chainable through `seed`.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// The usage text printed for --help and on argument errors.
std::string usage();

}  // namespace saturate::cli
