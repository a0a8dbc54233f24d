#include <iostream>
#include <string>
#include <vector>

#include "mhom/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mhom::run_cli(args, std::cout, std::cerr);
}
