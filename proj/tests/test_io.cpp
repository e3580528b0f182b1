#include <doctest.h>

#include <sstream>

#include "clstrata/cl_structures.hpp"
#include "clstrata/io.hpp"

using namespace clstrata;

namespace {

RibbonStructure planar_theta(EdgeMask twists) {
    Multigraph g = Multigraph::create(2, {{0, 1}, {0, 1}, {0, 1}});
    RotationSystem rot;
    rot.at = {{0, 2, 4}, {5, 3, 1}};
    return make_ribbon(g, rot, twists);
}

} // namespace

TEST_CASE("graph text round trip is bit exact") {
    std::string text = "2 3\n0 1\n0 1\n0 1\n";
    std::istringstream in(text);
    Multigraph g = io::read_graph(in);
    CHECK(g.n == 2);
    CHECK(g.m() == 3);
    CHECK(io::graph_to_string(g) == text);

    // Comments and blank lines are accepted on input.
    std::istringstream commented("# theta\n\n2 3\n0 1\n0 1 # parallel\n0 1\n");
    Multigraph h = io::read_graph(commented);
    CHECK(io::graph_to_string(h) == text);
}

TEST_CASE("graph parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            io::read_graph(in);
            FAIL("expected a parse error");
        } catch (const io::ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("2\n", 1);
    expect_line("2 2\n0 1\n", 3);
    expect_line("2 1\n0 5\n", 2);
    expect_line("2 1\n0 1\n0 1\n", 3);
}

TEST_CASE("ribbon text round trip") {
    RibbonStructure r = planar_theta(0b101);
    std::string text = io::ribbon_to_string(r);
    std::istringstream in(text);
    RibbonStructure back = io::read_ribbon(in);
    CHECK(back.graph.edges == r.graph.edges);
    CHECK(back.rotation == r.rotation);
    CHECK(back.twists == r.twists);
    CHECK(io::ribbon_to_string(back) == text);
}

TEST_CASE("ribbon rejects bad rotations with a line number") {
    std::istringstream in("2 1\n0 1\nrotation 0: 0 1\nrotation 1:\ntwists: 0\n");
    CHECK_THROWS_AS(io::read_ribbon(in), io::ParseError);
}

TEST_CASE("bitstrings put edge 0 first") {
    CHECK(io::mask_to_bitstring(0b011, 3) == "110");
    CHECK(io::bitstring_to_mask("110") == 0b011);
    CHECK_THROWS_AS(io::bitstring_to_mask("10x"), std::invalid_argument);
}

TEST_CASE("dot export labels twists") {
    std::string dot = io::to_dot(planar_theta(0b101));
    CHECK(dot.find("0 -- 1 [label=\"x\"]") != std::string::npos);
    CHECK(dot.find("0 -- 1 [label=\"=\"]") != std::string::npos);
    // One drawn edge per edge.
    std::size_t count = 0, pos = 0;
    while ((pos = dot.find("--", pos)) != std::string::npos) {
        ++count;
        pos += 2;
    }
    CHECK(count == 3);
}

TEST_CASE("ribbon json round trip") {
    RibbonStructure r = planar_theta(0b110);
    auto j = io::ribbon_to_json(r);
    CHECK(j["twists"] == "011");
    RibbonStructure back = io::ribbon_from_json(j);
    CHECK(io::ribbon_to_string(back) == io::ribbon_to_string(r));
}

TEST_CASE("classification json schema") {
    const auto& entry = catalog_entry("Ga");
    auto report = classify(entry.graph, entry.rotation, GeneratorSet{}, "Ga");
    auto j = io::classification_to_json(report);
    CHECK(j["graph"] == "Ga");
    CHECK(j["n"] == 6);
    CHECK(j["m"] == 9);
    CHECK(j["q"] == 4);
    CHECK(j["raw_strips"].get<int>() > 0);
    CHECK(j["orientable_raw"].get<int>() > 0);
    REQUIRE(j["orientable_classes"].size() == 1);
    CHECK(j["orientable_classes"][0]["genus"] == 2);
    CHECK(j["orientable_classes"][0]["twists"].get<std::string>().size() == 9);
    CHECK(j["generators_used"].size() == 3);
}

TEST_CASE("known-bad catalog round trip") {
    KnownBadCatalog catalog = KnownBadCatalog::seeded();
    std::ostringstream out;
    io::write_known_bad(out, catalog);
    std::istringstream in(out.str());
    KnownBadCatalog back = io::read_known_bad(in);
    REQUIRE(back.graphs.size() == catalog.graphs.size());
    CHECK(are_isomorphic(back.graphs[0], catalog.graphs[0]));
}
