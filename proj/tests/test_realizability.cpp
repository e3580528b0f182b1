#include <doctest.h>

#include <bit>

#include "clstrata/cl_structures.hpp"
#include "clstrata/realizability.hpp"

using namespace clstrata;

namespace {

Multigraph triangle() { return Multigraph::create(3, {{0, 1}, {1, 2}, {2, 0}}); }

Multigraph theta_graph() { return Multigraph::create(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph handcuff() { return Multigraph::create(2, {{0, 0}, {0, 1}, {1, 1}}); }

RibbonStructure theta_witness() {
    RotationSystem rot;
    rot.at = {{0, 2, 4}, {5, 3, 1}};
    return make_ribbon(theta_graph(), rot, 0b111);
}

RibbonStructure bouquet_witness() {
    const auto& entry = catalog_entry("torus-bouquet");
    return make_ribbon(entry.graph, entry.rotation, 0);
}

RibbonStructure point_witness() {
    Multigraph g = Multigraph::create(1, {});
    return make_ribbon(g, sorted_rotation(g), 0);
}

} // namespace

TEST_CASE("screen_odd_q") {
    auto no = screen_odd_q(triangle());
    REQUIRE(no.has_value());
    CHECK(no->verdict == Verdict::No);
    CHECK_FALSE(screen_odd_q(theta_graph()).has_value());
    CHECK_FALSE(screen_odd_q(catalog_entry("petersen").graph).has_value());
}

TEST_CASE("screen_loop_deg3") {
    // Loop, bridge, triangle: smoothing turns the triangle into a loop at a
    // degree-3 vertex.
    Multigraph chain = Multigraph::create(4, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 1}});
    auto no = screen_loop_deg3(chain);
    REQUIRE(no.has_value());
    CHECK(no->verdict == Verdict::No);

    // Loops at degree-4 vertices pass the screen.
    CHECK_FALSE(screen_loop_deg3(catalog_entry("torus-bouquet").graph).has_value());
    CHECK_FALSE(screen_loop_deg3(theta_graph()).has_value());
}

TEST_CASE("oracle verdicts") {
    auto yes = oracle_orientably_realizable(theta_graph());
    CHECK(yes.verdict == Verdict::Yes);
    REQUIRE(yes.witness.has_value());
    CHECK(is_strip(*yes.witness));
    CHECK(is_orientable(*yes.witness));

    CHECK(oracle_orientably_realizable(handcuff()).verdict == Verdict::No);
    CHECK(oracle_orientably_realizable(triangle()).verdict == Verdict::No);
    CHECK(oracle_orientably_realizable(Multigraph::create(1, {{0, 0}})).verdict ==
          Verdict::No);
    CHECK(oracle_orientably_realizable(catalog_entry("torus-bouquet").graph).verdict ==
          Verdict::Yes);

    // Two disjoint cycles joined by one edge reduce to the handcuff.
    Multigraph dumbbell = Multigraph::create(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
    CHECK(oracle_orientably_realizable(dumbbell).verdict == Verdict::No);
}

TEST_CASE("oracle witnesses reattach to the full graph") {
    // Theta with a pendant edge: the witness lives on all three vertices.
    Multigraph g = Multigraph::create(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}});
    auto report = oracle_orientably_realizable(g);
    REQUIRE(report.verdict == Verdict::Yes);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->graph.n == 3);
    CHECK(report.witness->graph.m() == 4);
    CHECK(is_strip(*report.witness));
    CHECK(is_orientable(*report.witness));
}

TEST_CASE("oracle budget") {
    // Seven loops at one vertex: the rotation space alone dwarfs the budget.
    Multigraph bouquet7 = Multigraph::create(
        1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}});
    CHECK(oracle_cost(bouquet7) > (std::uint64_t{1} << 26));
    CHECK_THROWS_AS(oracle_orientably_realizable(bouquet7), BudgetError);
}

TEST_CASE("known-bad bridge screen") {
    KnownBadCatalog known_bad = KnownBadCatalog::seeded();
    CHECK(known_bad.contains_isomorphic(catalog_entry("Gb").graph));

    // The necklace graph behind a bridge with a triangle on the other side.
    auto gb = catalog_entry("Gb").graph;
    std::vector<std::pair<int, int>> edges = gb.edges;
    edges.emplace_back(0, 6);
    edges.emplace_back(6, 7);
    edges.emplace_back(7, 8);
    edges.emplace_back(8, 6);
    Multigraph g = Multigraph::create(9, edges);
    auto no = screen_bridge_nonrealizable(g, known_bad);
    REQUIRE(no.has_value());
    CHECK(no->verdict == Verdict::No);

    CHECK_FALSE(screen_bridge_nonrealizable(theta_graph(), known_bad).has_value());

    // A bridge whose sides are both fine stays inconclusive.
    Multigraph two_triangles = Multigraph::create(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
    CHECK_FALSE(screen_bridge_nonrealizable(two_triangles, known_bad).has_value());
}

TEST_CASE("compose_tree") {
    // Two theta strips sharing one vertex.
    std::vector<TreePart> parts;
    parts.push_back({theta_witness(), {0, 1}});
    parts.push_back({theta_witness(), {1, 2}});
    auto merged = compose_tree(parts);
    CHECK(merged.graph.n == 3);
    CHECK(merged.graph.m() == 6);
    CHECK(cycle_rank(merged.graph) == 4);
    CHECK(is_strip(merged));
    CHECK(is_orientable(merged));
    CHECK(closed_euler(merged).genus_or_crosscap == 2);

    // A single part passes through.
    auto single = compose_tree({TreePart{theta_witness(), {0, 1}}});
    CHECK(single.graph.m() == 3);
    CHECK(is_strip(single));

    // Three edge-parts in a cyclic incidence pattern are rejected.
    Multigraph edge = Multigraph::create(2, {{0, 1}});
    RibbonStructure edge_strip = make_ribbon(edge, sorted_rotation(edge), 0);
    std::vector<TreePart> cyclic;
    cyclic.push_back({edge_strip, {0, 1}});
    cyclic.push_back({edge_strip, {1, 2}});
    cyclic.push_back({edge_strip, {2, 0}});
    CHECK_THROWS_AS(compose_tree(cyclic), std::invalid_argument);

    // Two-vertex overlaps are rejected.
    std::vector<TreePart> overlap;
    overlap.push_back({theta_witness(), {0, 1}});
    overlap.push_back({theta_witness(), {0, 1}});
    CHECK_THROWS_AS(compose_tree(overlap), std::invalid_argument);
}

TEST_CASE("connect_two") {
    // Two points with three links build the all-switched theta.
    auto theta = connect_two(point_witness(), point_witness(), {{0, 0}, {0, 0}, {0, 0}});
    CHECK(theta.graph.n == 2);
    CHECK(theta.graph.m() == 3);
    CHECK(theta.twists == 0b111);
    CHECK(is_strip(theta));
    CHECK(is_orientable(theta));

    // Two torus bouquets with one link: genus-2 strip.
    auto joined = connect_two(bouquet_witness(), bouquet_witness(), {{0, 0}});
    CHECK(cycle_rank(joined.graph) == 4);
    CHECK(is_strip(joined));
    CHECK(is_orientable(joined));
    CHECK(closed_euler(joined).genus_or_crosscap == 2);

    // Parity cases: every theta-witness path between its two vertices is
    // switched, so link placement steers the two connecting-cycle parities.
    auto case_ii = connect_two(theta_witness(), theta_witness(),
                               {{0, 0}, {1, 1}, {1, 0}}); // eps = 0, eps' = 1
    CHECK(is_strip(case_ii));
    CHECK(is_orientable(case_ii));
    auto case_iii = connect_two(theta_witness(), theta_witness(),
                                {{0, 0}, {0, 1}, {1, 1}}); // eps = eps' = 1
    CHECK(is_strip(case_iii));
    CHECK(is_orientable(case_iii));
    auto case_mixed = connect_two(theta_witness(), point_witness(),
                                  {{0, 0}, {1, 0}, {1, 0}}); // eps = 1, eps' = 0
    CHECK(is_strip(case_mixed));
    CHECK(is_orientable(case_mixed));

    CHECK_THROWS_AS(connect_two(theta_witness(), theta_witness(), {{0, 0}, {1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(connect_two(theta_witness(), theta_witness(), std::vector<Link>{}),
                    std::invalid_argument);
}

TEST_CASE("join_trees") {
    Multigraph point = Multigraph::create(1, {});
    auto theta = join_trees(point, point, {{0, 0}, {0, 0}, {0, 0}});
    CHECK(theta.twists == 0b111);
    CHECK(is_strip(theta));

    auto banana5 = join_trees(point, point, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}});
    CHECK(cycle_rank(banana5.graph) == 4);
    CHECK(is_strip(banana5));
    CHECK(is_orientable(banana5));

    auto bridge = join_trees(point, point, {{0, 0}});
    CHECK(is_strip(bridge));
    CHECK(cycle_rank(bridge.graph) == 0);

    Multigraph path = Multigraph::create(3, {{0, 1}, {1, 2}});
    auto wide = join_trees(path, path, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(is_strip(wide));
    CHECK(is_orientable(wide));

    CHECK_THROWS_AS(join_trees(point, point, {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(join_trees(triangle(), point, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("the two-link join fails strip-ness both ways") {
    for (const auto& patch : fig14_k2_structures()) {
        CHECK(boundary_components(patch) >= 2);
        CHECK(is_orientable(patch));
    }
}

TEST_CASE("decide integrates screens and oracle") {
    KnownBadCatalog known_bad = KnownBadCatalog::seeded();
    auto report = decide_orientably_realizable(triangle(), known_bad);
    CHECK(report.verdict == Verdict::No);
    CHECK(report.criterion == "odd-cycle-rank");

    auto theta = decide_orientably_realizable(theta_graph(), known_bad);
    CHECK(theta.verdict == Verdict::Yes);
    CHECK(theta.criterion == "oracle");
    REQUIRE(theta.witness.has_value());

    DecideOptions criteria_only;
    criteria_only.criteria_only = true;
    auto unknown = decide_orientably_realizable(theta_graph(), known_bad, criteria_only);
    CHECK(unknown.verdict == Verdict::Unknown);
}

TEST_CASE("Petersen is orientably realizable") {
    auto report = oracle_orientably_realizable(catalog_entry("petersen").graph);
    CHECK(report.verdict == Verdict::Yes);
    REQUIRE(report.witness.has_value());
    CHECK(is_strip(*report.witness));
    CHECK(is_orientable(*report.witness));
    CHECK(closed_euler(*report.witness).genus_or_crosscap == 3); // q = 6
}
