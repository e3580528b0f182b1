// The verification table: every reproduction check the acceptance suite runs.
#include "clstrata/verify.hpp"

#include <algorithm>
#include <bit>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "clstrata/cl_structures.hpp"
#include "clstrata/io.hpp"
#include "clstrata/parallel.hpp"
#include "clstrata/realizability.hpp"

namespace clstrata {

namespace {

void note(const VerifyOptions& opts, const std::string& message) {
    if (opts.progress) (*opts.progress) << "[verify] " << message << std::endl;
}

// ---------------------------------------------------------------- criterion 1

VerifyRow row_census(const VerifyOptions& opts) {
    note(opts, "census of cubic rank-4 graphs");
    auto graphs = enumerate_cubic_q4();
    int iso_pairs = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            if (are_isomorphic(graphs[i], graphs[j])) ++iso_pairs;
    bool shapes_ok = true;
    for (const auto& g : graphs) {
        shapes_ok = shapes_ok && g.n == 6 && g.m() == 9 && g.is_connected() &&
                    g.loop_mask() == 0 && cycle_rank(g) == 4;
        for (int v = 0; v < g.n; ++v) shapes_ok = shapes_ok && g.degree(v) == 3;
    }
    VerifyRow row;
    row.name = "census-7";
    row.expected = "7 connected loopless cubic graphs, pairwise non-isomorphic";
    std::ostringstream os;
    os << graphs.size() << " graphs, " << iso_pairs << " isomorphic pairs"
       << (shapes_ok ? "" : ", shape violations");
    if (graphs.size() == 6)
        os << " (exhaustive enumeration; the published list of seven repeats the "
              "bridgeless two-2-cycle graph)";
    row.computed = os.str();
    row.pass = graphs.size() == 7 && iso_pairs == 0 && shapes_ok;
    return row;
}

// ------------------------------------------------------------ criteria 2 + 3

struct CatalogClassification {
    std::vector<std::string> names;
    std::vector<ClassificationReport> reports;
};

CatalogClassification classify_catalog_q4() {
    CatalogClassification out;
    for (const auto& entry : catalog()) {
        bool q4 = std::find(entry.tags.begin(), entry.tags.end(), "q4-cubic") != entry.tags.end();
        if (!q4) continue;
        out.names.push_back(entry.name);
        out.reports.push_back(classify(entry.graph, entry.rotation, GeneratorSet{}, entry.name));
    }
    return out;
}

VerifyRow row_class_multiset(const VerifyOptions& opts, const CatalogClassification& cls) {
    note(opts, "orientable class counts over the seven surveyed drawings");
    std::vector<int> counts;
    int total = 0;
    for (const auto& report : cls.reports) {
        counts.push_back(static_cast<int>(report.classes.size()));
        total += static_cast<int>(report.classes.size());
    }
    std::vector<int> sorted = counts;
    std::sort(sorted.begin(), sorted.end());

    // Every census class must appear among the surveyed drawings.
    auto census = enumerate_cubic_q4();
    std::vector<int> hits(census.size(), 0);
    for (const auto& entry : catalog()) {
        if (std::find(entry.tags.begin(), entry.tags.end(), "q4-cubic") == entry.tags.end())
            continue;
        for (std::size_t i = 0; i < census.size(); ++i)
            if (are_isomorphic(entry.graph, census[i])) ++hits[i];
    }
    int covered = 0;
    for (int h : hits)
        if (h > 0) ++covered;

    VerifyRow row;
    row.name = "orientable-classes";
    row.expected = "counts {0,1,2,4,4,5,6} as a multiset, total 22";
    std::ostringstream os;
    os << "counts {";
    for (std::size_t i = 0; i < sorted.size(); ++i) os << (i ? "," : "") << sorted[i];
    os << "}, total " << total << "; drawings cover " << covered << "/" << census.size()
       << " isomorphism classes; no uniform equivalence regime reproduces the "
          "published per-figure counts";
    row.computed = os.str();
    row.pass = sorted == std::vector<int>{0, 1, 2, 4, 4, 5, 6} && total == 22 &&
               covered == static_cast<int>(census.size());
    return row;
}

VerifyRow row_anchors(const VerifyOptions& opts, const CatalogClassification& cls) {
    note(opts, "structural anchors for the unique and the impossible graphs");
    // Uniqueness of the anchors inside the census.
    auto census = enumerate_cubic_q4();
    int bridged = 0, three_two_cycles = 0;
    for (const auto& g : census) {
        if (bridges(g) != 0) ++bridged;
        int two_cycles = 0;
        for (EdgeMask c : simple_cycles(g))
            if (std::popcount(c) == 2) ++two_cycles;
        if (two_cycles == 3) ++three_two_cycles;
    }

    // The bridged drawing classifies to exactly one orientable class, the
    // three-2-cycle drawing to none, and twisting exactly its 2-cycle edges
    // forces three boundary circles.
    int bridge_classes = -1, necklace_classes = -1, b = -1;
    for (std::size_t i = 0; i < cls.reports.size(); ++i) {
        const auto& entry = catalog_entry(cls.names[i]);
        bool is_bridge_graph = bridges(entry.graph) != 0;
        int two_cycles = 0;
        EdgeMask two_cycle_edges = 0;
        for (EdgeMask c : simple_cycles(entry.graph)) {
            if (std::popcount(c) == 2) {
                ++two_cycles;
                two_cycle_edges |= c;
            }
        }
        if (is_bridge_graph) bridge_classes = static_cast<int>(cls.reports[i].classes.size());
        if (two_cycles == 3) {
            necklace_classes = static_cast<int>(cls.reports[i].classes.size());
            b = boundary_components(make_ribbon(entry.graph, entry.rotation, two_cycle_edges));
        }
    }

    VerifyRow row;
    row.name = "structural-anchors";
    row.expected = "unique bridged graph -> 1 class; unique three-2-cycle graph -> 0 classes "
                   "and 3 boundary circles when exactly its 2-cycle edges twist";
    std::ostringstream os;
    os << "census: " << bridged << " bridged, " << three_two_cycles
       << " with three 2-cycles; bridged drawing classes = " << bridge_classes
       << "; three-2-cycle drawing classes = " << necklace_classes << ", b = " << b;
    row.computed = os.str();
    row.pass = bridged == 1 && three_two_cycles == 1 && bridge_classes == 1 &&
               necklace_classes == 0 && b == 3;
    return row;
}

// ---------------------------------------------------------------- criterion 4

VerifyRow row_petersen(const VerifyOptions& opts) {
    note(opts, "Petersen oracle and fixed-rotation classes");
    const auto& entry = catalog_entry("petersen");
    auto oracle = oracle_orientably_realizable(entry.graph);
    auto report = classify(entry.graph, entry.rotation, GeneratorSet{}, "petersen");
    VerifyRow row;
    row.name = "petersen";
    row.expected = "oracle YES and >= 2 orientable classes";
    std::ostringstream os;
    os << "oracle " << (oracle.verdict == Verdict::Yes ? "YES" : "NO") << ", "
       << report.classes.size() << " classes";
    row.computed = os.str();
    row.pass = oracle.verdict == Verdict::Yes && report.classes.size() >= 2 &&
               oracle.witness && is_strip(*oracle.witness) && is_orientable(*oracle.witness);
    return row;
}

// ---------------------------------------------------------------- criterion 5

VerifyRow row_torus(const VerifyOptions& opts) {
    note(opts, "torus bouquet anchor");
    const auto& entry = catalog_entry("torus-bouquet");
    RibbonStructure r = make_ribbon(entry.graph, entry.rotation, 0);
    bool strip = is_strip(r);
    bool orientable = is_orientable(r);
    auto euler = closed_euler(r);
    VerifyRow row;
    row.name = "torus-anchor";
    row.expected = "interleaved 2-loop bouquet: strip, orientable, genus 1";
    std::ostringstream os;
    os << "strip = " << strip << ", orientable = " << orientable << ", chi = " << euler.chi
       << ", genus = " << euler.genus_or_crosscap;
    row.computed = os.str();
    row.pass = strip && orientable && euler.chi == 0 && euler.genus_or_crosscap == 1;
    return row;
}

// ---------------------------------------------------------------- criterion 6

VerifyRow row_loop_obstruction(const VerifyOptions& opts) {
    note(opts, "loop-at-degree-3 obstruction, all m <= 7");
    std::vector<Multigraph> family;
    for (int m = 1; m <= 7; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            const Multigraph& core = cyclic_part(g).graph;
            bool has_obstruction = false;
            for (int e = 0; e < core.m() && !has_obstruction; ++e)
                has_obstruction = core.is_loop(e) && core.degree(core.edges[e].first) == 3;
            if (has_obstruction) family.push_back(g);
        }
    }
    std::vector<int> verdicts(family.size(), 0); // 0 wrong, 1 NO, 2 skipped
    parallel_for(family.size(), [&](std::size_t i) {
        OracleOptions oracle_opts;
        oracle_opts.budget = opts.oracle_budget;
        try {
            auto report = oracle_orientably_realizable(family[i], oracle_opts);
            verdicts[i] = report.verdict == Verdict::No ? 1 : 0;
        } catch (const BudgetError&) {
            verdicts[i] = 2;
        }
    });
    int tested = 0, skipped = 0, wrong = 0;
    for (int v : verdicts) {
        if (v == 1) ++tested;
        if (v == 0) ++wrong;
        if (v == 2) ++skipped;
    }
    tested += wrong;
    VerifyRow row;
    row.name = "loop-obstruction";
    row.expected = "oracle NO for every loop-at-degree-3 graph";
    std::ostringstream os;
    os << tested << " graphs tested, " << wrong << " wrong verdicts, " << skipped
       << " over budget";
    row.computed = os.str();
    row.pass = wrong == 0 && tested > 0 && skipped == 0;
    return row;
}

// -------------------------------------------------- criteria 7 + 8 + 9 (scan)

struct ScanStats {
    long long graphs = 0;
    long long graphs_skipped = 0;
    long long structures = 0;
    long long strips = 0;
    long long route_mismatches = 0;   // sign assignment vs cycle parities
    long long strip_mismatches = 0;   // same-direction emptiness vs orientability
    long long euler_violations = 0;   // chi formula, chi <= 2, parity
    long long flip_violations = 0;    // vertex flip invariance spot checks
    long long bridge_violations = 0;  // bridges inside same-direction sets
};

// All cyclic orders at each vertex modulo reversal, as in the oracle.
std::vector<std::vector<std::vector<int>>> rotation_reps(const Multigraph& g) {
    std::vector<std::vector<std::vector<int>>> choices(g.n);
    for (int v = 0; v < g.n; ++v) {
        const auto& darts = g.darts_at(v);
        if (darts.size() <= 2) {
            choices[v].push_back(darts);
            continue;
        }
        std::vector<int> rest(darts.begin() + 1, darts.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> reversed(rest.rbegin(), rest.rend());
            if (rest > reversed) continue;
            std::vector<int> cycle{darts[0]};
            cycle.insert(cycle.end(), rest.begin(), rest.end());
            choices[v].push_back(std::move(cycle));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return choices;
}

// Boundary count plus the same-direction edge set of the walk through state 0.
std::pair<int, EdgeMask> trace_with_directions(int m, const std::vector<int>& succ,
                                               const std::vector<int>& pred, EdgeMask twists,
                                               std::vector<char>& visited,
                                               std::vector<int>& first_dart) {
    const int states = 4 * m;
    if (states == 0) return {1, 0};
    visited.assign(states, 0);
    first_dart.assign(m, -1);
    EdgeMask same = 0;
    int orbits = 0;
    for (int s0 = 0; s0 < states; ++s0) {
        if (visited[s0]) continue;
        ++orbits;
        bool record = orbits == 1; // representative walk
        int s = s0;
        do {
            visited[s] = 1;
            int d = s >> 1;
            int e = d >> 1;
            if (record) {
                if (first_dart[e] == -1)
                    first_dart[e] = d;
                else if (first_dart[e] == d)
                    same |= EdgeMask{1} << e;
            }
            int side = (s & 1) ^ static_cast<int>(twists >> e & 1);
            int arrived = d ^ 1;
            s = (side == 0 ? succ[arrived] : pred[arrived]) << 1 | side;
        } while (s != s0);
    }
    return {orbits / 2, same};
}

void scan_graph(const VerifyOptions& opts, const Multigraph& g, std::uint64_t graph_seed,
                ScanStats& stats);

ScanStats exhaustive_scan(const VerifyOptions& opts, int max_edges) {
    ScanStats total;
    for (int m = 0; m <= max_edges; ++m) {
        note(opts, "exhaustive structures over graphs with m = " + std::to_string(m));
        auto family = connected_multigraphs_with_edges(m);
        std::vector<ScanStats> per_graph(family.size());
        parallel_for(family.size(), [&](std::size_t i) {
            scan_graph(opts, family[i], opts.seed + 17 + i, per_graph[i]);
        });
        for (const auto& s : per_graph) {
            total.graphs += s.graphs;
            total.graphs_skipped += s.graphs_skipped;
            total.structures += s.structures;
            total.strips += s.strips;
            total.route_mismatches += s.route_mismatches;
            total.strip_mismatches += s.strip_mismatches;
            total.euler_violations += s.euler_violations;
            total.flip_violations += s.flip_violations;
            total.bridge_violations += s.bridge_violations;
        }
    }
    return total;
}

void scan_graph(const VerifyOptions& opts, const Multigraph& g, std::uint64_t graph_seed,
                ScanStats& stats) {
    std::mt19937_64 rng(graph_seed);
    // Budget check before materializing any cyclic orders; loop-heavy bouquets
    // have factorially many.
    const std::uint64_t rotation_cap = opts.structure_budget >> g.m();
    std::uint64_t rotations = 1;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        std::uint64_t per_vertex = 1;
        for (int i = 2; i <= d - 1 && per_vertex < (std::uint64_t{1} << 60); ++i)
            per_vertex *= i;
        if (d >= 3) per_vertex /= 2;
        if (rotations > rotation_cap / per_vertex) {
            ++stats.graphs_skipped;
            return;
        }
        rotations *= per_vertex;
    }
    ++stats.graphs;
    auto choices = rotation_reps(g);

    auto basis = fundamental_basis(g);
    EdgeMask bridge_set = bridges(g);
    const EdgeMask tmax = EdgeMask{1} << g.m();

    // Twist-level routes agree independently of the rotation.
    std::vector<char> orientable(tmax, 0);
    for (EdgeMask t = 0; t < tmax; ++t) {
        bool parity_ok = true;
        for (EdgeMask cycle : basis.cycles)
            if (std::popcount(cycle & t) % 2 != 0) {
                parity_ok = false;
                break;
            }
        orientable[t] = parity_ok;
        RibbonStructure probe = make_ribbon(g, sorted_rotation(g), t);
        bool by_signs;
        try {
            by_signs = is_orientable(probe); // throws if routes split
        } catch (const std::logic_error&) {
            ++stats.route_mismatches;
            continue;
        }
        if (by_signs != parity_ok) ++stats.route_mismatches;
    }

    std::vector<std::size_t> idx(g.n, 0);
    std::vector<int> succ(g.dart_count()), pred(g.dart_count());
    std::vector<char> visited;
    std::vector<int> first_dart;
    while (true) {
        for (int v = 0; v < g.n; ++v) {
            const auto& cycle = choices[v][idx[v]];
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                succ[cycle[i]] = cycle[(i + 1) % cycle.size()];
                pred[cycle[(i + 1) % cycle.size()]] = cycle[i];
            }
        }
        for (EdgeMask t = 0; t < tmax; ++t) {
            auto [b, same] =
                trace_with_directions(g.m(), succ, pred, t, visited, first_dart);
            ++stats.structures;
            int chi = g.n - g.m() + b;
            if (chi > 2) ++stats.euler_violations;
            if (orientable[t] && (2 - chi) % 2 != 0) ++stats.euler_violations;
            if (b == 1) {
                ++stats.strips;
                if ((same == 0) != static_cast<bool>(orientable[t]))
                    ++stats.strip_mismatches;
                if (same & bridge_set) ++stats.bridge_violations;
            }
        }
        int v = g.n - 1;
        while (v >= 0 && ++idx[v] == choices[v].size()) idx[v--] = 0;
        if (v < 0) break;
    }

    // Spot check: vertex flips preserve boundary count, orientability
    // and chi on a few random structures of this graph.
    for (int probe = 0; probe < 4 && g.n > 0; ++probe) {
        EdgeMask t = rng() & (tmax - 1);
        RibbonStructure r = make_ribbon(g, sorted_rotation(g), t);
        int v = static_cast<int>(rng() % g.n);
        RibbonStructure flipped = vertex_flip(r, v);
        if (boundary_components(r) != boundary_components(flipped) ||
            is_orientable(r) != is_orientable(flipped))
            ++stats.flip_violations;
    }
}

VerifyRow row_orientability_equivalence(const ScanStats& stats) {
    VerifyRow row;
    row.name = "orientability-equivalence";
    row.expected = "sign assignment = cycle parities = empty same-direction set (strips)";
    std::ostringstream os;
    os << stats.structures << " structures on " << stats.graphs << " graphs ("
       << stats.graphs_skipped << " skipped), " << stats.route_mismatches
       << " route mismatches, " << stats.strip_mismatches << " strip mismatches over "
       << stats.strips << " strips";
    row.computed = os.str();
    row.pass = stats.route_mismatches == 0 && stats.strip_mismatches == 0 &&
               stats.structures > 0;
    return row;
}

VerifyRow row_euler(const ScanStats& stats, const CatalogClassification& cls) {
    int genus_violations = 0;
    for (const auto& report : cls.reports)
        for (const auto& c : report.classes)
            if (c.genus_or_crosscap != 2) ++genus_violations;
    VerifyRow row;
    row.name = "euler-bookkeeping";
    row.expected = "chi = n - m + b <= 2, even when orientable; rank-4 strips have genus 2";
    std::ostringstream os;
    os << stats.euler_violations << " chi violations, " << stats.flip_violations
       << " flip violations, " << genus_violations << " genus violations";
    row.computed = os.str();
    row.pass = stats.euler_violations == 0 && stats.flip_violations == 0 &&
               genus_violations == 0;
    return row;
}

VerifyRow row_bridges(const ScanStats& stats) {
    VerifyRow row;
    row.name = "bridge-traversal";
    row.expected = "no bridge in any same-direction set";
    std::ostringstream os;
    os << stats.bridge_violations << " violations over " << stats.strips << " strips";
    row.computed = os.str();
    row.pass = stats.bridge_violations == 0;
    return row;
}

// --------------------------------------------------------------- criterion 10

VerifyRow row_cor_2v(const VerifyOptions& opts, const CatalogClassification& cls) {
    note(opts, "two- and three-cycle twist audit on planar graphs");
    long long checked = 0, violations = 0;
    for (std::size_t i = 0; i < cls.reports.size(); ++i) {
        const auto& entry = catalog_entry(cls.names[i]);
        bool planar =
            std::find(entry.tags.begin(), entry.tags.end(), "planar") != entry.tags.end();
        if (!planar) continue;
        if (!verify_cor_2v(cls.reports[i])) ++violations;
        // Stronger sweep: every orientable strip of the planar survey.
        auto strips = enumerate_strips(entry.graph, entry.rotation);
        auto basis = fundamental_basis(entry.graph);
        auto cycles = simple_cycles(entry.graph);
        for (EdgeMask t : strips) {
            bool orientable = true;
            for (EdgeMask cycle : basis.cycles)
                if (std::popcount(cycle & t) % 2 != 0) {
                    orientable = false;
                    break;
                }
            if (!orientable) continue;
            ++checked;
            for (EdgeMask cycle : cycles) {
                int len = std::popcount(cycle);
                int twisted = std::popcount(cycle & t);
                if ((len == 2 && twisted != 2) || (len == 3 && twisted != 2)) ++violations;
            }
        }
    }
    VerifyRow row;
    row.name = "cor-2v-audit";
    row.expected = "2-cycles fully twisted, 3-cycles twisted exactly twice";
    std::ostringstream os;
    os << checked << " orientable strips audited, " << violations << " violations";
    row.computed = os.str();
    row.pass = violations == 0 && checked > 0;
    return row;
}

// --------------------------------------------------------- criteria 11 + 12

struct ConstructorResults {
    int built = 0;
    int failures = 0;
    bool k2_rejected = false;
    bool fig14_blocked = false;
    std::vector<Multigraph> built_graphs;
};

RibbonStructure pool_witness(int which) {
    switch (which % 4) {
        case 0: { // single vertex
            Multigraph g = Multigraph::create(1, {});
            return make_ribbon(g, sorted_rotation(g), 0);
        }
        case 1: { // theta, planar, all switched
            const auto& entry = catalog_entry("fig2a-theta");
            return make_ribbon(entry.graph, entry.rotation, 0b111);
        }
        case 2: { // torus bouquet
            const auto& entry = catalog_entry("torus-bouquet");
            return make_ribbon(entry.graph, entry.rotation, 0);
        }
        default: { // two-vertex tree strip
            Multigraph g = Multigraph::create(2, {{0, 1}});
            return make_ribbon(g, sorted_rotation(g), 0);
        }
    }
}

Multigraph random_tree(std::mt19937_64& rng, int max_n) {
    int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    return Multigraph::create(n, edges);
}

ConstructorResults run_constructors(const VerifyOptions& opts) {
    note(opts, "seeded constructor soundness");
    ConstructorResults results;
    std::mt19937_64 rng(opts.seed);
    for (int trial = 0; trial < 200; ++trial) {
        try {
            RibbonStructure built = [&]() -> RibbonStructure {
                switch (trial % 3) {
                    case 0: { // compose_tree
                        int want = 1 + static_cast<int>(rng() % 4);
                        std::vector<TreePart> parts;
                        std::vector<char> id_shared; // global id already a glue point
                        int next_global = 0;
                        for (int i = 0; i < want; ++i) {
                            RibbonStructure w = pool_witness(static_cast<int>(rng() % 4));
                            std::vector<int> to_global(w.graph.n, -1);
                            if (i > 0) {
                                // Glue at a fresh share point; each global id
                                // hosts at most one glue so the incidence
                                // graph stays a tree.
                                std::vector<int> candidates;
                                for (int id = 0; id < next_global; ++id)
                                    if (!id_shared[id]) candidates.push_back(id);
                                if (candidates.empty()) break;
                                int glue = candidates[rng() % candidates.size()];
                                id_shared[glue] = 1;
                                to_global[rng() % w.graph.n] = glue;
                            }
                            for (int v = 0; v < w.graph.n; ++v) {
                                if (to_global[v] != -1) continue;
                                to_global[v] = next_global++;
                                id_shared.push_back(0);
                            }
                            parts.push_back(TreePart{w, to_global});
                        }
                        return compose_tree(parts);
                    }
                    case 1: { // connect_two
                        RibbonStructure w1 = pool_witness(static_cast<int>(rng() % 4));
                        RibbonStructure w2 = pool_witness(static_cast<int>(rng() % 4));
                        int k = (rng() % 2) ? 3 : 1;
                        std::vector<Link> links;
                        for (int i = 0; i < k; ++i)
                            links.push_back(Link{static_cast<int>(rng() % w1.graph.n),
                                                 static_cast<int>(rng() % w2.graph.n)});
                        return connect_two(w1, w2, links);
                    }
                    default: { // join_trees
                        Multigraph t1 = random_tree(rng, 4);
                        Multigraph t2 = random_tree(rng, 4);
                        int k = 2 * static_cast<int>(rng() % 4) + 1;
                        std::vector<Link> links;
                        for (int i = 0; i < k; ++i)
                            links.push_back(Link{static_cast<int>(rng() % t1.n),
                                                 static_cast<int>(rng() % t2.n)});
                        return join_trees(t1, t2, links);
                    }
                }
            }();
            ++results.built;
            if (!is_strip(built) || !is_orientable(built)) ++results.failures;
            results.built_graphs.push_back(built.graph);
        } catch (const std::exception&) {
            ++results.failures;
        }
    }
    // The failing two-link configuration.
    try {
        RibbonStructure theta = pool_witness(1);
        connect_two(theta, theta, {{0, 0}, {1, 1}});
        results.k2_rejected = false;
    } catch (const std::invalid_argument&) {
        results.k2_rejected = true;
    }
    results.fig14_blocked = true;
    for (const auto& patch : fig14_k2_structures()) {
        if (boundary_components(patch) < 2) results.fig14_blocked = false;
        if (!is_orientable(patch)) results.fig14_blocked = false;
    }
    return results;
}

VerifyRow row_constructors(const ConstructorResults& results) {
    VerifyRow row;
    row.name = "constructors-sound";
    row.expected = "200 witnesses strip+orientable; k=2 join rejected with b >= 2";
    std::ostringstream os;
    os << results.built << " built, " << results.failures << " failures, k2 rejected = "
       << results.k2_rejected << ", fig14 blocked = " << results.fig14_blocked;
    row.computed = os.str();
    row.pass = results.built == 200 && results.failures == 0 && results.k2_rejected &&
               results.fig14_blocked;
    return row;
}

VerifyRow row_criteria_vs_oracle(const VerifyOptions& opts,
                                 const ConstructorResults& constructors) {
    note(opts, "screens and constructors versus the oracle, all m <= 7");
    KnownBadCatalog known_bad = KnownBadCatalog::seeded();
    long long screens_fired = 0, contradictions = 0, skipped = 0, graphs = 0;
    for (int m = 0; m <= 7; ++m) {
        for (const auto& g : connected_multigraphs_with_edges(m)) {
            ++graphs;
            std::vector<std::string> fired;
            if (screen_odd_q(g)) fired.push_back("odd-q");
            if (screen_loop_deg3(g)) fired.push_back("loop-3");
            if (screen_bridge_nonrealizable(g, known_bad)) fired.push_back("bridge");
            if (fired.empty()) continue;
            ++screens_fired;
            OracleOptions oracle_opts;
            oracle_opts.budget = opts.oracle_budget;
            try {
                auto report = oracle_orientably_realizable(g, oracle_opts);
                if (report.verdict != Verdict::No) ++contradictions;
            } catch (const BudgetError&) {
                ++skipped;
            }
        }
    }
    long long constructor_checked = 0, constructor_bad = 0, constructor_skipped = 0;
    for (const auto& g : constructors.built_graphs) {
        OracleOptions oracle_opts;
        oracle_opts.budget = opts.oracle_budget;
        try {
            auto report = oracle_orientably_realizable(g, oracle_opts);
            ++constructor_checked;
            if (report.verdict != Verdict::Yes) ++constructor_bad;
        } catch (const BudgetError&) {
            ++constructor_skipped;
        }
    }
    VerifyRow row;
    row.name = "criteria-vs-oracle";
    row.expected = "no screen or constructor verdict contradicts the oracle";
    std::ostringstream os;
    os << graphs << " graphs, " << screens_fired << " screen verdicts, " << contradictions
       << " contradictions (" << skipped << " over budget); " << constructor_checked
       << " constructor graphs oracle-confirmed, " << constructor_bad << " wrong ("
       << constructor_skipped << " over budget)";
    row.computed = os.str();
    row.pass = contradictions == 0 && constructor_bad == 0 && screens_fired > 0;
    return row;
}

} // namespace

std::vector<VerifyRow> run_verification(const VerifyOptions& opts) {
    std::vector<VerifyRow> rows;
    rows.push_back(row_census(opts));
    auto cls = classify_catalog_q4();
    rows.push_back(row_class_multiset(opts, cls));
    rows.push_back(row_anchors(opts, cls));
    rows.push_back(row_petersen(opts));
    rows.push_back(row_torus(opts));
    rows.push_back(row_loop_obstruction(opts));
    auto stats = exhaustive_scan(opts, 8);
    rows.push_back(row_orientability_equivalence(stats));
    rows.push_back(row_euler(stats, cls));
    rows.push_back(row_bridges(stats));
    rows.push_back(row_cor_2v(opts, cls));
    auto constructors = run_constructors(opts);
    rows.push_back(row_constructors(constructors));
    rows.push_back(row_criteria_vs_oracle(opts, constructors));
    return rows;
}

void print_rows(std::ostream& out, const std::vector<VerifyRow>& rows) {
    int index = 1;
    for (const auto& row : rows) {
        out << (row.pass ? "PASS" : "FAIL") << " [" << index++ << "/" << rows.size() << "] "
            << row.name << "\n       expected: " << row.expected
            << "\n       computed: " << row.computed << '\n';
    }
}

bool all_pass(const std::vector<VerifyRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
}

} // namespace clstrata
