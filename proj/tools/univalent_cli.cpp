#include <iostream>

#include "univalent/cli.hpp"

int main(int argc, char** argv) {
  return univalent::cli::main_entry(argc, argv, std::cout, std::cerr);
}
