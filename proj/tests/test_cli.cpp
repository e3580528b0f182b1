#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clstrata/cli.hpp"
#include "clstrata/io.hpp"

using namespace clstrata;

namespace {

// Writes content to a temp file and removes it on scope exit.
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content, const char* name) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

const char* kPetersen =
    "10 15\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n"
    "5 7\n7 9\n9 6\n6 8\n8 5\n";

} // namespace

TEST_CASE("analyze") {
    TempFile file(kPetersen, "clstrata_petersen.graph");
    std::ostringstream out, err;
    CHECK(cli::cmd_analyze(file.path.string(), false, out, err) == cli::kExitOk);
    CHECK(out.str().find("q = 6") != std::string::npos);
    CHECK(out.str().find("bridges: none") != std::string::npos);

    std::ostringstream jout, jerr;
    CHECK(cli::cmd_analyze(file.path.string(), true, jout, jerr) == cli::kExitOk);
    auto j = nlohmann::json::parse(jout.str());
    CHECK(j["q"] == 6);
    CHECK(j["bridges"].empty());
    CHECK(j["cyclic_part"]["m"] == 15);
}

TEST_CASE("analyze reports malformed input with exit 2") {
    TempFile file("2 1\n0 9\n", "clstrata_bad.graph");
    std::ostringstream out, err;
    CHECK(cli::cmd_analyze(file.path.string(), false, out, err) == cli::kExitUsage);
    CHECK(err.str().find("line 2") != std::string::npos);
}

TEST_CASE("enumerate census") {
    std::ostringstream out, err;
    CHECK(cli::cmd_enumerate("", true, false, out, err) == cli::kExitOk);
    std::size_t blocks = 0, pos = 0;
    while ((pos = out.str().find("census graph", pos)) != std::string::npos) {
        ++blocks;
        pos += 1;
    }
    CHECK(blocks == 6);
}

TEST_CASE("classify catalog entries") {
    std::ostringstream out, err;
    CHECK(cli::cmd_classify("", "complement,flips,auto", "Gb", out, err) == cli::kExitOk);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["graph"] == "Gb");
    CHECK(j["orientable_classes"].empty());

    std::ostringstream out2, err2;
    CHECK(cli::cmd_classify("", "complement,flips,auto", "Ga", out2, err2) == cli::kExitOk);
    auto j2 = nlohmann::json::parse(out2.str());
    CHECK(j2["orientable_classes"].size() == 1);
}

TEST_CASE("realizable command") {
    TempFile file("3 3\n0 1\n1 2\n2 0\n", "clstrata_triangle.graph");
    std::ostringstream out, err;
    CHECK(cli::cmd_realizable(file.path.string(), false, "", "", true, out, err) ==
          cli::kExitOk);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["verdict"] == "NO");
    CHECK(j["criterion"] == "odd-cycle-rank");
}

TEST_CASE("export dot and json") {
    std::string ribbon = "2 3\n0 1\n0 1\n0 1\nrotation 0: 0 2 4\nrotation 1: 5 3 1\n"
                         "twists: 111\n";
    TempFile file(ribbon, "clstrata_theta.ribbon");
    std::ostringstream dot, err;
    CHECK(cli::cmd_export(file.path.string(), "dot", dot, err) == cli::kExitOk);
    CHECK(dot.str().find("label=\"x\"") != std::string::npos);
    CHECK(dot.str().find("label=\"=\"") == std::string::npos);

    std::ostringstream json_out, err2;
    CHECK(cli::cmd_export(file.path.string(), "json", json_out, err2) == cli::kExitOk);
    auto j = nlohmann::json::parse(json_out.str());
    CHECK(j["twists"] == "111");

    std::ostringstream out3, err3;
    CHECK(cli::cmd_export(file.path.string(), "svg", out3, err3) == cli::kExitUsage);
}

TEST_CASE("catalog command") {
    std::ostringstream out, err;
    CHECK(cli::cmd_catalog("", "", out, err) == cli::kExitOk);
    CHECK(out.str().find("petersen") != std::string::npos);
    CHECK(out.str().find("q4-cubic") != std::string::npos);

    std::ostringstream one, err2;
    CHECK(cli::cmd_catalog("", "torus-bouquet", one, err2) == cli::kExitOk);
    std::istringstream in(one.str());
    RibbonStructure r = io::read_ribbon(in);
    CHECK(r.graph.n == 1);
    CHECK(r.graph.m() == 2);
}
