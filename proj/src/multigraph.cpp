#include "clstrata/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace clstrata {

Multigraph Multigraph::create(int n, const std::vector<std::pair<int, int>>& endpoints) {
    if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
    if (static_cast<int>(endpoints.size()) > kMaxEdges)
        throw std::invalid_argument("at most 64 edges supported");
    Multigraph g;
    g.n = n;
    g.edges = endpoints;
    g.darts.assign(n, {});
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        g.darts[u].push_back(2 * i);
        g.darts[v].push_back(2 * i + 1);
    }
    return g;
}

EdgeMask Multigraph::loop_mask() const {
    EdgeMask mask = 0;
    for (int i = 0; i < m(); ++i)
        if (is_loop(i)) mask |= EdgeMask{1} << i;
    return mask;
}

bool Multigraph::is_connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : darts[v]) {
            int w = other_endpoint(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

int cycle_rank(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("cycle_rank needs a connected graph");
    return g.m() - g.n + 1;
}

namespace {

// Iterative lowlink bridge finder over darts; parallel edges are handled by
// forbidding only the arriving dart's mate, not the whole vertex pair.
EdgeMask find_bridges(const Multigraph& g) {
    const int n = g.n;
    std::vector<int> disc(n, -1), low(n, 0);
    EdgeMask out = 0;
    int timer = 0;

    struct Frame {
        int v;
        int parent_dart; // dart we arrived on (at v), -1 for roots
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.next < g.darts_at(v).size()) {
                int d = g.darts_at(v)[f.next++];
                if (d == f.parent_dart) continue; // don't reuse the tree edge
                int w = g.other_endpoint(d);
                if (w == v) continue; // loops carry no connectivity
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, Multigraph::mate(d), 0});
                } else {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (f.parent_dart != -1) {
                    int p = g.endpoint(Multigraph::mate(f.parent_dart));
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) out |= EdgeMask{1} << Multigraph::edge_of(f.parent_dart);
                }
            }
        }
    }
    return out;
}

} // namespace

EdgeMask bridges(const Multigraph& g) { return find_bridges(g); }

std::vector<EdgeMask> two_connected_components(const Multigraph& g) {
    EdgeMask bridge_set = bridges(g);
    std::vector<int> comp(g.n, -1);
    int ncomp = 0;
    for (int root = 0; root < g.n; ++root) {
        if (comp[root] != -1) continue;
        comp[root] = ncomp;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.darts_at(v)) {
                if (bridge_set >> Multigraph::edge_of(d) & 1) continue;
                int w = g.other_endpoint(d);
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<EdgeMask> sets(ncomp, 0);
    for (int e = 0; e < g.m(); ++e) {
        if (bridge_set >> e & 1) continue;
        sets[comp[g.edges[e].first]] |= EdgeMask{1} << e;
    }
    std::vector<EdgeMask> out;
    for (EdgeMask s : sets)
        if (s) out.push_back(s);
    std::sort(out.begin(), out.end(), [](EdgeMask a, EdgeMask b) {
        return (a & -a) < (b & -b); // order by least edge index
    });
    return out;
}

namespace {

// Working edge during cyclic-part reduction: endpoints plus the chain of
// original darts it has absorbed, oriented from `u` to `v`.
struct Chain {
    int u, v;
    std::vector<int> darts_forward; // original dart at the start of each absorbed edge
    bool alive = true;
};

} // namespace

CyclicPart cyclic_part(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("cyclic_part needs a connected graph");

    std::vector<Chain> chains(g.m());
    for (int e = 0; e < g.m(); ++e)
        chains[e] = Chain{g.edges[e].first, g.edges[e].second, {2 * e}, true};

    std::vector<char> vertex_alive(g.n, 1);
    std::vector<std::vector<int>> incident(g.n); // chain ids, loops listed twice
    auto rebuild_incident = [&]() {
        for (auto& list : incident) list.clear();
        for (int c = 0; c < static_cast<int>(chains.size()); ++c) {
            if (!chains[c].alive) continue;
            incident[chains[c].u].push_back(c);
            incident[chains[c].v].push_back(c);
        }
    };
    rebuild_incident();

    auto degree = [&](int v) { return static_cast<int>(incident[v].size()); };
    int alive_vertices = g.n;

    // Phase 1: contract external (pendant) edges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (!vertex_alive[v] || degree(v) != 1 || alive_vertices == 1) continue;
            int c = incident[v][0];
            chains[c].alive = false;
            vertex_alive[v] = 0;
            --alive_vertices;
            rebuild_incident();
            changed = true;
            break;
        }
    }

    // Phase 2: smooth degree-2 vertices whose two darts belong to distinct
    // edges.  A vertex carrying only a loop stays (a cycle ends up as one
    // vertex with one loop).
    changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (!vertex_alive[v] || degree(v) != 2) continue;
            int c1 = incident[v][0], c2 = incident[v][1];
            if (c1 == c2) continue; // loop at v
            // Orient c1 into v and c2 out of v.
            Chain& a = chains[c1];
            Chain& b = chains[c2];
            std::vector<int> fwd;
            if (a.v == v) {
                fwd = a.darts_forward;
            } else {
                for (auto it = a.darts_forward.rbegin(); it != a.darts_forward.rend(); ++it)
                    fwd.push_back(Multigraph::mate(*it));
            }
            int start = (a.v == v) ? a.u : a.v;
            if (b.u == v) {
                fwd.insert(fwd.end(), b.darts_forward.begin(), b.darts_forward.end());
            } else {
                for (auto it = b.darts_forward.rbegin(); it != b.darts_forward.rend(); ++it)
                    fwd.push_back(Multigraph::mate(*it));
            }
            int end = (b.u == v) ? b.v : b.u;
            int keep = std::min(c1, c2), drop = std::max(c1, c2);
            chains[keep] = Chain{start, end, fwd, true};
            chains[drop].alive = false;
            vertex_alive[v] = 0;
            --alive_vertices;
            rebuild_incident();
            changed = true;
            break;
        }
    }

    CyclicPart out;
    out.vertex_map.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (vertex_alive[v]) {
            out.vertex_map[v] = static_cast<int>(out.vertex_origin.size());
            out.vertex_origin.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> endpoints;
    for (auto& c : chains) {
        if (!c.alive) continue;
        // Deterministic orientation: lead with the smaller original dart.
        if (!c.darts_forward.empty() &&
            Multigraph::mate(c.darts_forward.back()) < c.darts_forward.front()) {
            std::vector<int> rev;
            for (auto it = c.darts_forward.rbegin(); it != c.darts_forward.rend(); ++it)
                rev.push_back(Multigraph::mate(*it));
            c.darts_forward = rev;
            std::swap(c.u, c.v);
        }
        endpoints.emplace_back(out.vertex_map[c.u], out.vertex_map[c.v]);
        std::vector<int> origin_edges;
        for (int d : c.darts_forward) origin_edges.push_back(Multigraph::edge_of(d));
        out.edge_origins.push_back(origin_edges);
        out.dart_origin.push_back(c.darts_forward.front());
        out.dart_origin.push_back(Multigraph::mate(c.darts_forward.back()));
    }
    out.graph = Multigraph::create(static_cast<int>(out.vertex_origin.size()), endpoints);
    return out;
}

} // namespace clstrata
