#include <iostream>

#include "lpk/cli.hpp"

int main(int argc, char** argv) {
    return lpk::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
