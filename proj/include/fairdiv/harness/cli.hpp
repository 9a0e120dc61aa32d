#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fairdiv::harness {

enum class Command { Allocate, Verify, Deviate, Reproduce, Enumerate };
enum class OutputFormat { Text, Machine };

struct RunConfig {
  Command command = Command::Reproduce;
  std::string mechanism;
  std::string instance_path;
  std::optional<std::string> paired_path;
  std::optional<std::size_t> grid;
  std::optional<std::string> family;
  OutputFormat format = OutputFormat::Text;
  unsigned workers = 1;
  std::optional<std::string> agent;     // deviate: restrict to one agent id
  std::optional<std::size_t> agents;    // enumerate: number of agents
  std::size_t subset_cap = 14;
  bool trace = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int violation = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Executes an already parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairdiv::harness
