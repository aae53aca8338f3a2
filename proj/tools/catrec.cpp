#include <iostream>

#include "catrec/cli.hpp"

int main(int argc, char** argv) { return catrec::run_cli(argc, argv, std::cout); }
