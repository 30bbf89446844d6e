#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return adelic::cli::runCommand({argv + 1, argv + argc}, std::cout, std::cerr);
}
