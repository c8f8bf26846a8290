#include <string>
#include <vector>

#include "qschur/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qschur::cli_main(args);
}
