#include <iostream>
#include <string>
#include <vector>

#include "involut/cli.hpp"

int main(int argc, char** argv) {
  return involut::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
