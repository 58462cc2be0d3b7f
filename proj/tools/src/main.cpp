#include <iostream>

#include "valkit/cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return valkit::cli::dispatch(args, std::cout, std::cerr);
}
