#include <iostream>
#include <vector>

#include "lcs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  lcs::cli::CommandResult result = lcs::cli::run(args);
  std::cout << lcs::cli::render(result);
  return result.exit_code;
}
