#include <iostream>
#include <string>
#include <vector>

#include "tpcheck/cli.hpp"

int main(int argc, char** argv) {
  return tpcheck::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
