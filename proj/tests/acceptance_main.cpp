// Acceptance runner: one pass/fail line per criterion, exit 1 on any failure.
#include <cstdlib>
#include <iostream>
#include <string>

#include "clstrata/verify.hpp"

int main(int argc, char** argv) {
    clstrata::VerifyOptions opts;
    opts.progress = &std::cerr;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) {
            opts.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--quiet") {
            opts.progress = nullptr;
        } else {
            std::cerr << "usage: acceptance [--seed N] [--quiet]\n";
            return 2;
        }
    }
    auto rows = clstrata::run_verification(opts);
    clstrata::print_rows(std::cout, rows);
    return clstrata::all_pass(rows) ? 0 : 1;
}
