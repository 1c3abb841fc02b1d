#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rootsc::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Parsed command line. Exactly one subcommand is set.
struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string output;  // empty: don't write a DFA; "-": standard output
  bool minimize = false;
  bool dump = false;
  bool enumerate = false;
  bool json = false;
  std::optional<std::int64_t> n, k, l, max_n;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cap = 2'000'000;
};

int cmd_root(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_unary_root(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_minimize(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_monoid(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_ukl(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_stirling(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_bound(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_largest2(const CliConfig& c, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootsc::cli
