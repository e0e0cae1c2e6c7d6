#pragma once

// The command-line surface: argument parsing into a CommandPlan, execution
// into a JSON certificate, and the exit-code contract.

#include "salemlat/json_io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salemlat::cli {

inline constexpr const char* kSchema = "salem-lattice/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kInputOutput = 3 };

struct CommandPlan {
  std::string subcommand;
  /// Flag name (without dashes) and value, in declaration order.  Defaults
  /// are filled in so the echo is complete.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<std::string> output_path;

  const std::string* input(const std::string& name) const;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// --help was given; what() is the help text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

class InputOutputError : public Error {
 public:
  using Error::Error;
};

struct CommandResult {
  Json certificate;
  int exit_code = kPass;
};

/// Arguments exclude the program name.
CommandPlan parse_command(const std::vector<std::string>& args);
CommandResult execute(const CommandPlan& plan);
/// The certificate exactly as written: two-space indentation, final newline.
std::string render(const Json& certificate);

/// Parse, execute, write; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace salemlat::cli
