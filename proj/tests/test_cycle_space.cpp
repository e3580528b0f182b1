#include <doctest.h>

#include <bit>
#include <set>

#include "clstrata/cycle_space.hpp"

using namespace clstrata;

namespace {

Multigraph theta() { return Multigraph::create(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph k4() {
    return Multigraph::create(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Independent oracle: every even-degree subset, brute force.
std::set<EdgeMask> even_subsets(const Multigraph& g) {
    std::set<EdgeMask> out;
    for (EdgeMask s = 0; s < (EdgeMask{1} << g.m()); ++s)
        if (is_cycle_vector(g, s)) out.insert(s);
    return out;
}

} // namespace

TEST_CASE("fundamental basis of the theta graph") {
    auto basis = fundamental_basis(theta());
    CHECK(basis.tree == 0b001); // lowest-dart tree uses edge 0
    REQUIRE(basis.cycles.size() == 2);
    CHECK(basis.cycles[0] == 0b011);
    CHECK(basis.cycles[1] == 0b101);

    // The basis spans exactly the even-degree subsets.
    auto space = even_subsets(theta());
    CHECK(space == std::set<EdgeMask>{0b000, 0b011, 0b101, 0b110});
    for (EdgeMask s : space) CHECK(gf2_in_span(basis.cycles, s));
}

TEST_CASE("fundamental basis edge cases") {
    Multigraph loop = Multigraph::create(1, {{0, 0}});
    auto basis = fundamental_basis(loop);
    REQUIRE(basis.cycles.size() == 1);
    CHECK(basis.cycles[0] == 0b1);

    Multigraph tree = Multigraph::create(3, {{0, 1}, {1, 2}});
    CHECK(fundamental_basis(tree).cycles.empty());

    Multigraph disconnected = Multigraph::create(2, {});
    CHECK_THROWS_AS(fundamental_basis(disconnected), std::invalid_argument);
}

TEST_CASE("sym_diff") {
    CHECK(sym_diff(0b011, 0b011) == 0);
    CHECK(sym_diff(0b011, 0b101) == 0b110);
}

TEST_CASE("is_cycle_vector") {
    auto g = k4();
    CHECK(is_cycle_vector(g, 0b001011));        // triangle 0-1-2
    CHECK_FALSE(is_cycle_vector(g, 0b000001));  // single edge
    Multigraph loop = Multigraph::create(1, {{0, 0}});
    CHECK(is_cycle_vector(loop, 0b1));
}

TEST_CASE("vertex_cut") {
    CHECK(vertex_cut(theta(), {0}) == 0b111);
    Multigraph loop = Multigraph::create(1, {{0, 0}});
    CHECK(vertex_cut(loop, {0}) == 0);
    CHECK(vertex_cut(k4(), {0}) == 0b000111);
}

TEST_CASE("cycle and cut spaces are orthogonal") {
    for (int m = 1; m <= 5; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            auto cycles = even_subsets(g);
            for (EdgeMask subset = 0; subset < (EdgeMask{1} << g.n); ++subset) {
                std::vector<int> vs;
                for (int v = 0; v < g.n; ++v)
                    if (subset >> v & 1) vs.push_back(v);
                EdgeMask cut = vertex_cut(g, vs);
                for (EdgeMask c : cycles) CHECK(std::popcount(c & cut) % 2 == 0);
            }
        }
    }
}

TEST_CASE("basis rank equals the cycle rank") {
    for (int m = 1; m <= 5; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            auto basis = fundamental_basis(g);
            CHECK(static_cast<int>(basis.cycles.size()) == cycle_rank(g));
            CHECK(gf2_rank(basis.cycles) == cycle_rank(g));
            for (EdgeMask c : basis.cycles) CHECK(is_cycle_vector(g, c));
        }
    }
}

TEST_CASE("simple cycles") {
    auto cycles = simple_cycles(theta());
    CHECK(cycles == std::vector<EdgeMask>{0b011, 0b101, 0b110});
    Multigraph loop = Multigraph::create(1, {{0, 0}});
    CHECK(simple_cycles(loop) == std::vector<EdgeMask>{0b1});
}
