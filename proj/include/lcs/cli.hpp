#ifndef LCS_CLI_HPP
#define LCS_CLI_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace lcs::cli {

// status "ok" iff exit_code 0; codes: 1 domain error, 2 input error,
// 3 resource-cap error. All numeric payload fields are exact strings.
struct CommandResult {
  int exit_code = 0;
  nlohmann::json payload;
  std::vector<std::string> diagnostics;
  std::string format = "json";  // as requested by --format
  bool approx = false;

  bool ok() const { return exit_code == 0; }
};

CommandResult run(const std::vector<std::string>& args);

// Renders a result the way the binary prints it.
std::string render(const CommandResult& result);

}  // namespace lcs::cli

#endif
