#include <iostream>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = ivp::cli::dispatch(args, std::cerr);
  std::cout << result.payload;
  return result.exit_code;
}
