#include <iostream>

#include "schurpath/cli.hpp"

int main(int argc, char** argv) {
    return schurpath::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
