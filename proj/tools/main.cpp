#include <iostream>

#include "triality/cli.hpp"

int main(int argc, char** argv) {
    return triality::run_cli(argc, argv, std::cout, std::cerr);
}
