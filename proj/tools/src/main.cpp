#include <iostream>

#include "islands_tool/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return islands::tool::run(args, std::cout, std::cerr);
}
