#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rouquier::cli {

struct CommandRequest {
  std::string subcommand;
  std::optional<int> d;
  std::optional<int> r;
  std::optional<std::vector<int>> weights;
  std::optional<int> n;
  bool spetsial = false;
  bool grid = false;
  std::optional<std::string> lambda;
  std::string format = "text";
  std::optional<std::string> output;
};

struct CommandResult {
  int status = 0;
  std::string output;
};

/// Raised for bad input; `flag` names the offending option.
struct ValidationError {
  std::string flag;
  std::string message;
};

/// Throws ValidationError for inconsistent requests.
CommandResult run(const CommandRequest& request);

/// Parses argv, runs the request and writes the result to `out` (or the
/// --output file). Messages go to `err`. Returns the process exit status.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rouquier::cli
