#include <shapelemma/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
  return shapelemma::run_cli(argc, argv, std::cout, std::cerr);
}
