#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supertime/config.hpp"

namespace supertime {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Subcommand { bound, echo, causality, radiation, vacuum, interference };

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string_view to_string(Subcommand sub);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> warnings;
};

/// Evaluates a subcommand over every sweep point. Rows are ordered by sweep
/// index; independent points are computed concurrently.
Table compute(Subcommand sub, const RunConfig& config, bool oracle = false);

struct RunOptions {
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;
  bool oracle = false;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalidInput = 2,
  kExitApproximation = 3,
  kExitNumerical = 4,
};

/// Writes `<output>` (CSV) and `<output>.meta.json`. Errors are reported as a
/// single line on `err` and mapped to a non-zero exit code.
int run(Subcommand sub, RunConfig config, const RunOptions& options, std::ostream& err);

/// Maps the exception currently being handled to an exit code and message.
int report_current_exception(std::ostream& err);

}  // namespace supertime
