#include <iostream>
#include <string>
#include <vector>

#include "tomseq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tomseq::cli::run(args, std::cout, std::cerr);
}
