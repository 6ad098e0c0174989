#include <iostream>

#include "origon/cli.hpp"

int main(int argc, char** argv) {
    return origon::cli_main(argc, argv, std::cout, std::cerr);
}
