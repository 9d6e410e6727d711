#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lowerset/enumerate.hpp"

namespace lowerset::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kTargetsUnmet = 3 };

/// Inclusive integer range, written `a..b` or `a` on the command line.
struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// Throws std::invalid_argument on malformed or empty ranges.
Range parse_range(const std::string& text);

enum class Format { csv, json, jsonl };

struct RunConfig {
  std::string subcommand;
  Range d{2, 2};
  Range n{1, 1};
  CountMethod method = CountMethod::automatic;
  std::optional<std::uint64_t> seed;
  double c1 = 0.5;
  double c2 = 1.5;
  std::size_t trials = 20;
  std::optional<std::size_t> m;
  std::optional<std::size_t> m_max;
  bool search = false;
  bool grid = false;
  Format format = Format::csv;
  std::string out;         // empty: standard output
  std::string points_out;  // discretize: witness point set as CSV
  std::uint64_t node_budget = kDefaultNodeBudget;
};

int run_count(const RunConfig& cfg, std::ostream& out);
int run_enumerate(const RunConfig& cfg, std::ostream& out);
int run_bounds(const RunConfig& cfg, std::ostream& out);
/// Throws std::invalid_argument for inconsistent flag combinations.
int run_discretize(const RunConfig& cfg, std::ostream& out);

/// Parses argv, applies LOWERSET_BUDGET, dispatches, and maps failures to
/// exit codes. Usage text goes to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lowerset::cli
