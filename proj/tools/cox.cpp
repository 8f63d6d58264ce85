#include <iostream>
#include <string>
#include <vector>

#include "cox/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cox::cli::run(args, std::cout, std::cerr);
}
