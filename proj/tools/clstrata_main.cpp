#include "clstrata/cli.hpp"

int main(int argc, char** argv) { return clstrata::cli::run(argc, argv); }
