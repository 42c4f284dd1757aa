#include <iostream>

#include "noregret_cli/app.hpp"

int main(int argc, char** argv) {
  return noregret::cli::run_cli(argc, argv, std::cout, std::cerr);
}
