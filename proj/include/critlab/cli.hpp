#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace critlab {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitRefuted = 1, kExitInput = 2, kExitParameter = 3 };

/// Options after merging the config file (key=value) and flags; flags win.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  int d = 3;
  std::string delta = "1000000";  // integer or "D0"
  std::uint64_t budget = 1000000;
  long grid = 10000;
  long precision_cap = 4096;
  int jobs = 0;
  std::string report;  // empty: stdout
  std::string format = "json";
  bool force = false;
  bool assume_hypotheses = false;
  bool serial = false;
  std::string omega_override;  // rational or "cbrt"
  std::string epsilon;
  std::string lambda;
  std::string x;  // comma-separated vertex list
};

/// Parses a flat key=value file. Blank lines and lines starting with '#' are
/// skipped; ParseError on malformed lines.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// args[0] is the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critlab
