// Exhaustive generation of small multigraphs up to isomorphism.
#include <algorithm>
#include <array>
#include <set>

#include "clstrata/multigraph.hpp"

namespace clstrata {

namespace {

// Backtracks over the 15 unordered vertex pairs of a 6-vertex graph choosing
// edge multiplicities, targeting degree 3 everywhere.
struct CubicSearch {
    static constexpr int kN = 6;
    std::vector<std::pair<int, int>> slots;
    std::array<int, kN> deg{};
    std::vector<std::pair<int, int>> edges;
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Multigraph> out;

    CubicSearch() {
        for (int u = 0; u < kN; ++u)
            for (int v = u + 1; v < kN; ++v) slots.emplace_back(u, v);
    }

    void finish() {
        Multigraph g = Multigraph::create(kN, edges);
        if (!g.is_connected()) return;
        auto enc = canonical_encoding(g);
        if (seen.insert(enc).second) out.push_back(canonical_form(g));
    }

    void rec(std::size_t slot) {
        if (slot == slots.size()) {
            bool cubic = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
            if (cubic) finish();
            return;
        }
        auto [u, v] = slots[slot];
        // Degree-3 cap; a vertex whose remaining slots are exhausted must be full.
        int max_mult = std::min(3 - deg[u], 3 - deg[v]);
        for (int mult = 0; mult <= max_mult; ++mult) {
            for (int k = 0; k < mult; ++k) edges.emplace_back(u, v);
            deg[u] += mult;
            deg[v] += mult;
            bool feasible = true;
            // u's slots are exhausted once every (u, *) pair with * > v is past;
            // slots are emitted in lexicographic order, so u is complete when
            // the next slot leaves u behind.
            if (slot + 1 == slots.size() || slots[slot + 1].first > u) {
                feasible = deg[u] == 3;
            }
            if (feasible) rec(slot + 1);
            deg[u] -= mult;
            deg[v] -= mult;
            for (int k = 0; k < mult; ++k) edges.pop_back();
        }
    }
};

} // namespace

std::vector<Multigraph> enumerate_cubic_q4() {
    CubicSearch search;
    search.rec(0);
    std::sort(search.out.begin(), search.out.end(),
              [](const Multigraph& a, const Multigraph& b) {
                  return canonical_encoding(a) < canonical_encoding(b);
              });
    return search.out;
}

namespace {

std::vector<std::vector<Multigraph>>& level_cache() {
    static std::vector<std::vector<Multigraph>> cache;
    return cache;
}

// Connected multigraphs with m+1 edges all arise from connected multigraphs
// with m edges by adding an edge between existing vertices (any non-bridge
// edge of the child can be removed) or by attaching a pendant vertex (any
// leaf edge of a tree can be removed).
std::vector<Multigraph> build_level(int m) {
    if (m == 0) return {Multigraph::create(1, {})};
    const auto& prev = connected_multigraphs_with_edges(m - 1);
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Multigraph> out;
    auto offer = [&](const Multigraph& g) {
        auto enc = canonical_encoding(g);
        if (seen.insert(enc).second) out.push_back(canonical_form(g));
    };
    for (const auto& g : prev) {
        for (int u = 0; u < g.n; ++u) {
            for (int v = u; v < g.n; ++v) {
                auto edges = g.edges;
                edges.emplace_back(u, v);
                offer(Multigraph::create(g.n, edges));
            }
            auto edges = g.edges;
            edges.emplace_back(u, g.n);
            offer(Multigraph::create(g.n + 1, edges));
        }
    }
    std::sort(out.begin(), out.end(), [](const Multigraph& a, const Multigraph& b) {
        return canonical_encoding(a) < canonical_encoding(b);
    });
    return out;
}

} // namespace

std::vector<Multigraph> connected_multigraphs_with_edges(int m) {
    if (m < 0) throw std::invalid_argument("edge count must be non-negative");
    auto& cache = level_cache();
    while (static_cast<int>(cache.size()) <= m)
        cache.push_back(build_level(static_cast<int>(cache.size())));
    return cache[m];
}

} // namespace clstrata
