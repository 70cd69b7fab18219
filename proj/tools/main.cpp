#include "exinv/cli.hpp"

int main(int argc, char** argv) { return exinv::cli::run(argc, argv); }
