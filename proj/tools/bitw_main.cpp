#include <string>
#include <vector>

#include "bitw/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bitw::run_cli(args);
}
