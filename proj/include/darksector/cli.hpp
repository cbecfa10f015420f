#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "darksector/exact_angle.hpp"
#include "darksector/scene.hpp"

namespace darksector::cli {

enum class Command { Validate, Trace, Map, Sectors, Unfold, Render };

std::optional<Command> parse_command(std::string_view name);

enum ExitCode : int {
  kOk = 0,
  kInternalFailure = 1,
  kInvalidScene = 2,
  kParseError = 3,
  kNoDarkSector = 4,
};

struct RunConfig {
  Command command = Command::Validate;
  std::filesystem::path scene_path;
  std::optional<std::filesystem::path> report_path;  // render: saved trace or sectors report
  std::size_t seeds = 4096;
  double eps_b = 1e-10;
  std::size_t cap = 10000;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::optional<double> theta;             // trace: radians
  std::optional<RationalTurn> theta_pi;    // trace: exact multiple of pi
  double margin = kDefaultCircleMargin;
  std::optional<double> radius;            // K radius override
  std::optional<std::filesystem::path> out_path;
  std::optional<std::filesystem::path> svg_path;
  unsigned threads = 0;
};

/// Throws std::invalid_argument for out-of-range parameters.
void check_config(const RunConfig& config);

/// "p/q" or "p" in units of pi.
RationalTurn parse_pi_multiple(std::string_view text);

/// Writes via a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path& path, std::string_view content);

/// Runs one command. Documents go to out_path (or `out` when unset);
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace darksector::cli
