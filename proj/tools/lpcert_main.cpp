#include <iostream>
#include <string>
#include <vector>

#include "lpcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = lpcert::cli::run_command(args);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
