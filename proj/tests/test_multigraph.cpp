#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "clstrata/cycle_space.hpp"
#include "clstrata/multigraph.hpp"

using namespace clstrata;

namespace {

Multigraph theta() { return Multigraph::create(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph petersen() {
    return Multigraph::create(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                   {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                   {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

} // namespace

TEST_CASE("construction fixes dart numbering and degrees") {
    Multigraph loop = Multigraph::create(1, {{0, 0}});
    CHECK(loop.m() == 1);
    CHECK(loop.degree(0) == 2);
    CHECK(loop.is_loop(0));

    Multigraph t = theta();
    CHECK(t.degree(0) == 3);
    CHECK(t.degree(1) == 3);
    CHECK(t.endpoint(0) == 0);
    CHECK(t.endpoint(1) == 1);
    CHECK(Multigraph::mate(4) == 5);

    Multigraph p = petersen();
    CHECK(p.m() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);

    CHECK_THROWS_AS(Multigraph::create(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("degree sum is twice the edge count") {
    for (int m = 0; m <= 5; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            int total = 0;
            for (int v = 0; v < g.n; ++v) total += g.degree(v);
            CHECK(total == 2 * g.m());
        }
    }
}

TEST_CASE("cycle_rank") {
    CHECK(cycle_rank(theta()) == 2);
    CHECK(cycle_rank(petersen()) == 6);
    Multigraph disconnected = Multigraph::create(3, {{0, 1}});
    CHECK_THROWS_AS(cycle_rank(disconnected), std::invalid_argument);
}

TEST_CASE("bridges") {
    Multigraph path = Multigraph::create(3, {{0, 1}, {1, 2}});
    CHECK(bridges(path) == 0b11);
    CHECK(bridges(theta()) == 0);
    Multigraph loop = Multigraph::create(2, {{0, 0}, {0, 1}});
    CHECK(bridges(loop) == 0b10); // the loop is never a bridge
}

TEST_CASE("two_connected_components") {
    CHECK(two_connected_components(theta()) == std::vector<EdgeMask>{0b111});
    // Two triangles joined by a bridge.
    Multigraph g = Multigraph::create(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3},
                                          {3, 4}, {4, 5}, {5, 3}});
    auto comps = two_connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == 0b0000111);
    CHECK(comps[1] == 0b1110000);
    CHECK((comps[0] & bridges(g)) == 0);
    CHECK((comps[0] | comps[1] | bridges(g)) == g.all_edges_mask());
}

TEST_CASE("bridge graph splits into two 4-edge components") {
    // Independent oracle: delete the bridge, collect edge sets by reachability.
    Multigraph g = Multigraph::create(6, {{1, 2}, {1, 2}, {0, 1}, {0, 2}, {0, 3},
                                          {4, 5}, {4, 5}, {3, 4}, {3, 5}});
    EdgeMask bridge_set = bridges(g);
    REQUIRE(bridge_set == EdgeMask{1} << 4);
    std::vector<int> side(g.n, -1);
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : g.darts_at(v)) {
            if (Multigraph::edge_of(d) == 4) continue;
            int w = g.other_endpoint(d);
            if (side[w] == -1) {
                side[w] = 0;
                stack.push_back(w);
            }
        }
    }
    EdgeMask left = 0, right = 0;
    for (int e = 0; e < g.m(); ++e) {
        if (e == 4) continue;
        (side[g.edges[e].first] == 0 ? left : right) |= EdgeMask{1} << e;
    }
    auto comps = two_connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(((comps[0] == left && comps[1] == right) ||
           (comps[0] == right && comps[1] == left)));
    CHECK(std::popcount(comps[0]) == 4);
    CHECK(std::popcount(comps[1]) == 4);
}

TEST_CASE("cyclic_part contracts trees and smooths paths") {
    // A tree collapses to a point.
    Multigraph tree = Multigraph::create(4, {{0, 1}, {1, 2}, {1, 3}});
    auto cp = cyclic_part(tree);
    CHECK(cp.graph.n == 1);
    CHECK(cp.graph.m() == 0);

    // Triangle with a pendant edge: one vertex with one loop.
    Multigraph tri = Multigraph::create(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    cp = cyclic_part(tri);
    CHECK(cp.graph.n == 1);
    CHECK(cp.graph.m() == 1);
    CHECK(cp.graph.is_loop(0));
    REQUIRE(cp.edge_origins.size() == 1);
    std::set<int> absorbed(cp.edge_origins[0].begin(), cp.edge_origins[0].end());
    CHECK(absorbed == std::set<int>{0, 1, 2});

    // Cubic loopless graphs are already cyclic.
    Multigraph t = theta();
    cp = cyclic_part(t);
    CHECK(cp.graph.n == 2);
    CHECK(cp.graph.m() == 3);
}

TEST_CASE("cyclic_part is idempotent and preserves rank") {
    for (int m = 1; m <= 5; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            auto cp = cyclic_part(g);
            CHECK(cycle_rank(cp.graph) == cycle_rank(g));
            auto cp2 = cyclic_part(cp.graph);
            CHECK(cp2.graph.n == cp.graph.n);
            CHECK(cp2.graph.m() == cp.graph.m());
            CHECK(are_isomorphic(cp.graph, cp2.graph));
        }
    }
}

TEST_CASE("automorphisms") {
    Multigraph loop = Multigraph::create(1, {{0, 0}});
    CHECK(automorphisms(loop).size() == 1);
    CHECK(automorphisms(theta()).size() == 12); // 2 vertex perms x 3! edge perms
    CHECK(automorphisms(petersen()).size() == 120);
}

TEST_CASE("automorphism group axioms on small graphs") {
    for (int m = 1; m <= 4; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            auto auts = automorphisms(g);
            // Identity present.
            bool has_identity = false;
            for (const auto& a : auts) {
                bool id = true;
                for (int v = 0; v < g.n; ++v) id = id && a.vperm[v] == v;
                for (int e = 0; e < g.m(); ++e) id = id && a.eperm[e] == e;
                has_identity = has_identity || id;
            }
            CHECK(has_identity);
            // Closure under composition.
            std::set<std::pair<std::vector<int>, std::vector<int>>> table;
            for (const auto& a : auts) table.insert({a.vperm, a.eperm});
            for (const auto& a : auts) {
                for (const auto& b : auts) {
                    std::vector<int> vc(g.n), ec(g.m());
                    for (int v = 0; v < g.n; ++v) vc[v] = a.vperm[b.vperm[v]];
                    for (int e = 0; e < g.m(); ++e) ec[e] = a.eperm[b.eperm[e]];
                    CHECK(table.count({vc, ec}) == 1);
                }
            }
        }
    }
}

TEST_CASE("isomorphism") {
    Multigraph t1 = theta();
    Multigraph t2 = Multigraph::create(2, {{1, 0}, {0, 1}, {1, 0}});
    CHECK(are_isomorphic(t1, t2));
    Multigraph triangle = Multigraph::create(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(are_isomorphic(t1, triangle));
}

TEST_CASE("Petersen minus a vertex smooths to the nonplanar census graph") {
    Multigraph p = petersen();
    // Delete vertex 0 and its three edges, renumbering the rest down by one.
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : p.edges)
        if (u != 0 && v != 0) edges.emplace_back(u - 1, v - 1);
    Multigraph chopped = Multigraph::create(9, edges);
    auto cp = cyclic_part(chopped);
    CHECK(cp.graph.n == 6);
    CHECK(cp.graph.m() == 9);
    // K_{3,3}
    Multigraph k33 = Multigraph::create(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4},
                                            {3, 4}, {0, 5}, {2, 5}, {4, 5}});
    CHECK(are_isomorphic(cp.graph, k33));
}

TEST_CASE("cubic rank-4 census") {
    // Exhaustive enumeration: six isomorphism classes exist.
    auto graphs = enumerate_cubic_q4();
    CHECK(graphs.size() == 6);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CHECK(graphs[i].n == 6);
        CHECK(graphs[i].m() == 9);
        CHECK(graphs[i].loop_mask() == 0);
        CHECK(cycle_rank(graphs[i]) == 4);
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(are_isomorphic(graphs[i], graphs[j]));
    }
    int bridged = 0;
    for (const auto& g : graphs)
        if (bridges(g)) ++bridged;
    CHECK(bridged == 1);
}

TEST_CASE("automorphism budget") {
    Multigraph big = Multigraph::create(13, {{0, 1}});
    CHECK_THROWS_AS(automorphisms(big), BudgetError);
}
