// Verification harness: the reproduction checks behind `clstrata verify-paper`.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace clstrata {

struct VerifyRow {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    // Per-graph cap on rotation-systems x twist-assignments in the
    // exhaustive sweeps; graphs beyond it are skipped and counted.
    std::uint64_t structure_budget = std::uint64_t{1} << 22;
    std::uint64_t oracle_budget = std::uint64_t{1} << 31;
    std::ostream* progress = nullptr;
};

std::vector<VerifyRow> run_verification(const VerifyOptions& opts = {});

void print_rows(std::ostream& out, const std::vector<VerifyRow>& rows);

bool all_pass(const std::vector<VerifyRow>& rows);

} // namespace clstrata
