#include <crtarray/cli.hpp>

int main(int argc, char** argv) {
    return crtarray::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
