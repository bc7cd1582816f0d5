#include <iostream>

#include "monkbench/harness/cli.hpp"

int main(int argc, char** argv) {
  return monkbench::cli_main({argv + 1, argv + argc}, std::cout, std::cerr);
}
