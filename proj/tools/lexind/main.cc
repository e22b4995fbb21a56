#include <iostream>
#include <string>
#include <vector>

#include "lexind/commands.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lexind::cli::Run(args, std::cout, std::cerr);
}
