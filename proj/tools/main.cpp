#include <iostream>

#include "newtonprofile/cli.hpp"

int main(int argc, char** argv) {
  return newtonprofile::cli::run(argc, argv, std::cout, std::cerr);
}
