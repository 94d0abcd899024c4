#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  const int code = bnested::cli::run(args, std::cin, std::cout, std::cerr);
  std::cout.flush();
  if (!std::cout) return bnested::cli::kIo;
  return code;
}
