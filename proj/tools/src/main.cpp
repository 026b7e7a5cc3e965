#include <iostream>

#include "ccc_cli/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return ccc::cli::cli_main({argv + 1, argv + argc}, std::cout, std::cerr);
}
