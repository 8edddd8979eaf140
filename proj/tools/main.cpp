#include "gitstrata/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  gitstrata::cli::Result r = gitstrata::cli::run(args);
  if (!r.out.empty()) std::cout << r.out;
  if (!r.err.empty()) std::cerr << r.err;
  return r.exit_code;
}
