#include <iostream>
#include <string>
#include <vector>

#include "liecoh/catalog.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return liecoh::cli_main(args, std::cout, std::cerr);
}
