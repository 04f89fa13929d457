#include <iostream>
#include <string>
#include <vector>

#include "wban/cli.hpp"

int main(int argc, char** argv) {
  return wban::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
