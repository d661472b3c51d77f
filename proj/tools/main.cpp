#include "weylbill/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return weylbill::cli::run(argc, argv, std::cout, std::cerr);
}
