#include "qcirc/cli.hpp"

int main(int argc, char **argv) {
    return qcirc::cli::run(argc, argv);
}
