#include "clstrata/cycle_space.hpp"

#include <algorithm>
#include <bit>

namespace clstrata {

CycleBasis fundamental_basis(const Multigraph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("fundamental_basis needs a connected graph");
    // Iterative lowest-dart-index DFS from vertex 0.
    std::vector<int> parent_dart(g.n, -1); // dart arriving at v along the tree
    std::vector<char> visited(g.n, 0);
    EdgeMask tree = 0;
    std::vector<int> stack{0};
    visited[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : g.darts_at(v)) {
            int w = g.other_endpoint(d);
            if (visited[w]) continue;
            visited[w] = 1;
            parent_dart[w] = Multigraph::mate(d);
            tree |= EdgeMask{1} << Multigraph::edge_of(d);
            stack.push_back(w);
        }
    }

    auto path_to_root = [&](int v) {
        EdgeMask mask = 0;
        while (parent_dart[v] != -1) {
            mask ^= EdgeMask{1} << Multigraph::edge_of(parent_dart[v]);
            v = g.other_endpoint(parent_dart[v]);
        }
        return mask;
    };

    CycleBasis basis;
    basis.tree = tree;
    for (int e = 0; e < g.m(); ++e) {
        if (tree >> e & 1) continue;
        basis.cotree.push_back(e);
        auto [u, v] = g.edges[e];
        // Tree paths to the root cancel above the meet vertex.
        EdgeMask cycle = path_to_root(u) ^ path_to_root(v) ^ (EdgeMask{1} << e);
        basis.cycles.push_back(cycle);
    }
    return basis;
}

bool is_cycle_vector(const Multigraph& g, EdgeMask s) {
    std::vector<int> incidence(g.n, 0);
    for (int e = 0; e < g.m(); ++e) {
        if (!(s >> e & 1)) continue;
        ++incidence[g.edges[e].first];
        ++incidence[g.edges[e].second];
    }
    return std::all_of(incidence.begin(), incidence.end(), [](int c) { return c % 2 == 0; });
}

EdgeMask vertex_cut(const Multigraph& g, const std::vector<int>& vs) {
    std::vector<char> in(g.n, 0);
    for (int v : vs) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex_cut: vertex out of range");
        in[v] = 1;
    }
    EdgeMask mask = 0;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        if (in[u] != in[v]) mask |= EdgeMask{1} << e;
    }
    return mask;
}

int gf2_rank(std::vector<EdgeMask> vectors) {
    int rank = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (!vectors[i]) continue;
        EdgeMask pivot = vectors[i] & -vectors[i];
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (vectors[j] & pivot) vectors[j] ^= vectors[i];
        ++rank;
    }
    return rank;
}

bool gf2_in_span(const std::vector<EdgeMask>& basis, EdgeMask v) {
    auto vectors = basis;
    vectors.push_back(v);
    return gf2_rank(vectors) == gf2_rank(basis);
}

std::vector<EdgeMask> simple_cycles(const Multigraph& g) {
    std::vector<EdgeMask> out;
    for (EdgeMask s = 1; s < (EdgeMask{1} << g.m()); ++s) {
        std::vector<int> incidence(g.n, 0);
        for (int e = 0; e < g.m(); ++e) {
            if (!(s >> e & 1)) continue;
            ++incidence[g.edges[e].first];
            ++incidence[g.edges[e].second];
        }
        bool ok = true;
        for (int v = 0; v < g.n && ok; ++v) ok = incidence[v] == 0 || incidence[v] == 2;
        if (!ok) continue;
        // Connectivity of the support.
        int start = -1;
        for (int v = 0; v < g.n && start < 0; ++v)
            if (incidence[v]) start = v;
        if (start < 0) continue;
        std::vector<char> seen(g.n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.darts_at(v)) {
                if (!(s >> Multigraph::edge_of(d) & 1)) continue;
                int w = g.other_endpoint(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (int v = 0; v < g.n && ok; ++v) ok = !incidence[v] || seen[v];
        if (ok) out.push_back(s);
    }
    return out;
}

} // namespace clstrata
