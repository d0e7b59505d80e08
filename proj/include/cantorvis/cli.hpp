#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cantorvis/cantor_ifs.hpp"
#include "cantorvis/orbits.hpp"
#include "cantorvis/rational.hpp"

namespace cantorvis::cli {

enum class OutputFormat { Json, Csv, Svg, Dot };

inline constexpr std::size_t kMaxBudget = 10'000'000;

struct RunConfig {
  std::string command;
  std::optional<Rational> lambda;
  std::optional<Rational> alpha;
  std::optional<Rational> slope_t;
  std::optional<Rational> point;
  int depth = 8;
  long k_window = 3;
  std::size_t budget = kDefaultOrbitBudget;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> out;
  /// Hard depth ceiling; CANTOR_VIS_MAX_DEPTH overrides the default.
  int max_depth = kDefaultMaxDepth;
};

/// Subcommand names, in help order.
const std::vector<std::string>& commands();

struct ParseOutcome {
  std::optional<RunConfig> config;
  /// Help text or parse error message when no config was produced.
  std::string message;
  int exit_code = 0;
};

/// Parses argv (without the program name). `env_max_depth` is the value of
/// CANTOR_VIS_MAX_DEPTH, if set.
ParseOutcome parse_command_line(const std::vector<std::string>& args,
                                const std::optional<std::string>& env_max_depth = std::nullopt);

struct RunResult {
  /// 0 definite answer, 2 Unknown / budget exceeded, 1 error.
  int exit_code = 0;
  std::string output;
};

RunResult run(const RunConfig& config);

}  // namespace cantorvis::cli
