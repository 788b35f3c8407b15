#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  try {
    return dyckperm::cli::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
