#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return terw::cli::main_entry({argv + 1, argv + argc}, std::cout, std::cerr);
}
