#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>

#include "clstrata/cl_structures.hpp"
#include "clstrata/ribbon.hpp"

using namespace clstrata;

namespace {

RibbonStructure single_loop(EdgeMask twists) {
    Multigraph g = Multigraph::create(1, {{0, 0}});
    RotationSystem rot;
    rot.at = {{0, 1}};
    return make_ribbon(g, rot, twists);
}

RibbonStructure torus_bouquet() {
    Multigraph g = Multigraph::create(1, {{0, 0}, {0, 0}});
    RotationSystem rot;
    rot.at = {{0, 2, 1, 3}};
    return make_ribbon(g, rot, 0);
}

RibbonStructure planar_theta(EdgeMask twists) {
    Multigraph g = Multigraph::create(2, {{0, 1}, {0, 1}, {0, 1}});
    RotationSystem rot;
    rot.at = {{0, 2, 4}, {5, 3, 1}};
    return make_ribbon(g, rot, twists);
}

} // namespace

TEST_CASE("boundary anchors: annulus, Moebius, torus") {
    CHECK(boundary_components(single_loop(0)) == 2); // untwisted band
    CHECK(boundary_components(single_loop(1)) == 1); // half-twisted band
    CHECK(boundary_components(torus_bouquet()) == 1);

    auto report = boundary(single_loop(0));
    CHECK(report.components == 2);
    CHECK(report.walks.size() == 4);
    std::size_t total = 0;
    for (const auto& walk : report.walks) total += walk.size();
    CHECK(total == 4); // every signed dart in exactly one walk
}

TEST_CASE("theta planar rotation has three faces untwisted and is a strip all-twisted") {
    CHECK(boundary_components(planar_theta(0)) == 3);
    CHECK(is_strip(planar_theta(0b111)));
}

TEST_CASE("is_strip") {
    CHECK(is_strip(single_loop(1)));
    CHECK_FALSE(is_strip(single_loop(0)));
    CHECK(is_strip(torus_bouquet()));
}

TEST_CASE("is_orientable") {
    CHECK_FALSE(is_orientable(single_loop(1)));
    CHECK(is_orientable(torus_bouquet()));
    CHECK(is_orientable(planar_theta(0b111)));
    CHECK_FALSE(is_orientable(planar_theta(0b001)));
}

TEST_CASE("cycle_parity") {
    auto r = planar_theta(0);
    CHECK(cycle_parity(r, 0b011) == 0);
    auto moebius = single_loop(1);
    CHECK(cycle_parity(moebius, 0b1) == 1);
    CHECK_THROWS_AS(cycle_parity(r, 0b001), std::invalid_argument); // single edge: no cycle
}

TEST_CASE("cycle_parity is linear over the cycle space") {
    for (EdgeMask t = 0; t < 8; ++t) {
        auto r = planar_theta(t);
        std::vector<EdgeMask> cycles{0b011, 0b101, 0b110};
        for (EdgeMask a : cycles)
            for (EdgeMask b : cycles)
                if (is_cycle_vector(r.graph, a ^ b) && (a ^ b))
                    CHECK(cycle_parity(r, a ^ b) ==
                          (cycle_parity(r, a) ^ cycle_parity(r, b)));
    }
}

TEST_CASE("closed_euler") {
    auto torus = closed_euler(torus_bouquet());
    CHECK(torus.chi == 0);
    CHECK(torus.orientable);
    CHECK(torus.genus_or_crosscap == 1);

    auto moebius = closed_euler(single_loop(1));
    CHECK(moebius.chi == 1);
    CHECK_FALSE(moebius.orientable);
    CHECK(moebius.genus_or_crosscap == 1); // projective plane

    auto theta = closed_euler(planar_theta(0b111));
    CHECK(theta.chi == 0);
    CHECK(theta.orientable);
    CHECK(theta.genus_or_crosscap == 1);
}

TEST_CASE("vertex_flip is an involution preserving boundary structure") {
    auto r = planar_theta(0b111);
    auto flipped = vertex_flip(r, 0);
    CHECK(flipped.twists == 0);
    CHECK(boundary_components(flipped) == 1);
    auto twice = vertex_flip(flipped, 0);
    CHECK(twice.twists == r.twists);
    CHECK(twice.rotation == r.rotation);

    // Flipping every vertex reverses all rotations and restores the twists.
    auto all = vertex_flip(vertex_flip(r, 0), 1);
    CHECK(all.twists == r.twists);
    for (int v = 0; v < 2; ++v) {
        std::vector<int> reversed(r.rotation.at[v].rbegin(), r.rotation.at[v].rend());
        CHECK(all.rotation.at[v] == reversed);
    }
}

TEST_CASE("same_direction_edges") {
    CHECK(same_direction_edges(single_loop(1)) == 0b1);
    CHECK(same_direction_edges(torus_bouquet()) == 0);
    CHECK(same_direction_edges(planar_theta(0b111)) == 0);
    CHECK_THROWS_AS(same_direction_edges(single_loop(0)), std::invalid_argument);
}

TEST_CASE("contract_edge_strip") {
    auto r = planar_theta(0b111);
    auto contracted = contract_edge_strip(r, 0);
    CHECK(contracted.graph.n == 1);
    CHECK(contracted.graph.m() == 2);
    CHECK(contracted.graph.is_loop(0));
    CHECK(contracted.graph.is_loop(1));
    CHECK(is_strip(contracted));
    CHECK(is_orientable(contracted));
    CHECK(closed_euler(contracted).genus_or_crosscap == 1);

    CHECK_THROWS_AS(contract_edge_strip(torus_bouquet(), 0), std::invalid_argument);

    // Contracting a bridge preserves strip-ness.
    Multigraph g = Multigraph::create(2, {{0, 0}, {0, 1}, {1, 1}});
    RotationSystem rot;
    rot.at = {{0, 1, 2}, {3, 4, 5}};
    for (EdgeMask t = 0; t < 8; ++t) {
        RibbonStructure h = make_ribbon(g, rot, t);
        int before = boundary_components(h);
        auto after = contract_edge_strip(h, 1);
        CHECK(boundary_components(after) == before);
        CHECK(is_orientable(after) == is_orientable(h));
    }
}

TEST_CASE("contraction preserves boundary count and orientability exhaustively") {
    for (int m = 2; m <= 4; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            RotationSystem rot = sorted_rotation(g);
            for (EdgeMask t = 0; t < (EdgeMask{1} << m); ++t) {
                RibbonStructure r = make_ribbon(g, rot, t);
                for (int e = 0; e < m; ++e) {
                    if (g.is_loop(e)) continue;
                    auto contracted = contract_edge_strip(r, e);
                    CHECK(boundary_components(contracted) == boundary_components(r));
                    CHECK(is_orientable(contracted) == is_orientable(r));
                }
            }
        }
    }
}

namespace {

// Test-side enumeration of all rotation systems (full, no reversal quotient).
void for_each_rotation(const Multigraph& g, int v, RotationSystem& rot,
                       const std::function<void(const RotationSystem&)>& fn) {
    if (v == g.n) {
        fn(rot);
        return;
    }
    std::vector<int> darts = g.darts_at(v);
    std::sort(darts.begin(), darts.end());
    do {
        rot.at[v] = darts;
        for_each_rotation(g, v + 1, rot, fn);
    } while (std::next_permutation(darts.begin() + (darts.empty() ? 0 : 1), darts.end()));
}

} // namespace

TEST_CASE("every graph admits a strip over some rotation") {
    for (int m = 1; m <= 4; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            bool found = false;
            RotationSystem rot;
            rot.at.assign(g.n, {});
            for_each_rotation(g, 0, rot, [&](const RotationSystem& candidate) {
                if (!found) found = !enumerate_strips(g, candidate).empty();
            });
            CHECK(found);
        }
    }
}

TEST_CASE("bad rotations are rejected") {
    Multigraph g = Multigraph::create(2, {{0, 1}});
    RotationSystem rot;
    rot.at = {{0, 1}, {}};
    CHECK_THROWS_AS(make_ribbon(g, rot, 0), std::invalid_argument);
}
