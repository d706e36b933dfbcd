#include <iostream>

#include "csiso/cli.hpp"

int main(int argc, char **argv)
{
  return csiso::run_cli(argc, argv, std::cout, std::cerr);
}
