#include "tildeiso/cli.hpp"

int main(int argc, char** argv) {
    return tildeiso::cli::run(argc, argv);
}
