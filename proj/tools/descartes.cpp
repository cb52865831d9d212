#include <iostream>

#include "descartes/cli.hpp"

int main(int argc, char** argv) {
    return descartes::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
