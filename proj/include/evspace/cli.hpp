#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace evspace::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kReproduceMismatch = 1,
  kInputError = 2,
  kResourceCap = 3,
};

/// Runs the command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixture directory compiled into the build.
std::filesystem::path default_data_dir();

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

/// Every pinned reference example, evaluated
/// against the fixtures in `data_dir`.
std::vector<GoldenCheck> golden_checks(const std::filesystem::path& data_dir);

}  // namespace evspace::cli
