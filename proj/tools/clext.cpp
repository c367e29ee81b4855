#include <iostream>

#include "clext/cli.hpp"

int main(int argc, char** argv) {
    return clext::cli::main_entry(argc, argv, std::cout, std::cerr);
}
