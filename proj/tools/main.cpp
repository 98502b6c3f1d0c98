#include <iostream>

#include "goodfact/cli.hpp"

int main(int argc, char** argv) { return goodfact::run(argc, argv, std::cout, std::cerr); }
