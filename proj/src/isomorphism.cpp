// Brute-force isomorphism machinery for small multigraphs.
#include <algorithm>
#include <array>
#include <cstdint>

#include "clstrata/multigraph.hpp"

namespace clstrata {

namespace {

constexpr int kAutBudget = 12;

std::vector<std::vector<std::uint8_t>> mult_matrix(const Multigraph& g) {
    std::vector<std::vector<std::uint8_t>> mult(g.n, std::vector<std::uint8_t>(g.n, 0));
    for (auto [u, v] : g.edges) {
        if (u == v)
            ++mult[u][u];
        else {
            ++mult[u][v];
            ++mult[v][u];
        }
    }
    return mult;
}

// Canonical encoding search.  Cells are visited column by column, so the
// encoding prefix is determined as soon as the first k vertices are chosen
// and unpromising branches prune early.
struct CanonSearch {
    int n;
    const std::vector<std::vector<std::uint8_t>>& mult;
    std::vector<std::uint32_t> best;
    std::vector<int> best_perm;
    std::vector<std::uint32_t> cur;
    std::vector<int> chosen;
    std::vector<char> used;

    CanonSearch(int n_, const std::vector<std::vector<std::uint8_t>>& mult_)
        : n(n_), mult(mult_), used(n_, 0) {}

    // cmp: -1 when cur went lexicographically below the best seen at branch
    // time; leaves always compare in full since best may have moved since.
    void dfs(int depth, int cmp) {
        if (depth == n) {
            if (best.empty() || cur < best) {
                best = cur;
                best_perm = chosen;
            }
            return;
        }
        std::vector<std::pair<std::vector<std::uint32_t>, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::vector<std::uint32_t> col;
            col.reserve(depth + 1);
            for (int i = 0; i < depth; ++i) col.push_back(mult[chosen[i]][v]);
            col.push_back(mult[v][v]);
            cands.emplace_back(std::move(col), v);
        }
        std::sort(cands.begin(), cands.end());
        // Twin pruning: a candidate whose relations to every other vertex
        // match an earlier candidate's is interchangeable with it.
        std::vector<int> keep;
        for (auto& [col, v] : cands) {
            bool twin = false;
            for (int w : keep) {
                if (mult[v][v] != mult[w][w]) continue;
                bool same = true;
                for (int z = 0; z < n && same; ++z) {
                    if (z == v || z == w) continue;
                    same = mult[v][z] == mult[w][z];
                }
                if (same) {
                    twin = true;
                    break;
                }
            }
            if (!twin) keep.push_back(v);
        }
        for (int v : keep) {
            std::vector<std::uint32_t> col;
            for (int i = 0; i < depth; ++i) col.push_back(mult[chosen[i]][v]);
            col.push_back(mult[v][v]);

            int next_cmp = cmp;
            if (cmp == 0 && !best.empty()) {
                std::size_t off = cur.size();
                bool worse = false;
                for (std::size_t i = 0; i < col.size(); ++i) {
                    if (col[i] < best[off + i]) {
                        next_cmp = -1;
                        break;
                    }
                    if (col[i] > best[off + i]) {
                        worse = true;
                        break;
                    }
                }
                if (worse) continue;
            }
            used[v] = 1;
            chosen.push_back(v);
            cur.insert(cur.end(), col.begin(), col.end());
            dfs(depth + 1, next_cmp);
            cur.resize(cur.size() - col.size());
            chosen.pop_back();
            used[v] = 0;
        }
    }
};

std::pair<std::vector<std::uint32_t>, std::vector<int>> canonical_with_perm(const Multigraph& g) {
    auto mult = mult_matrix(g);
    CanonSearch search(g.n, mult);
    search.dfs(0, 0);
    std::vector<std::uint32_t> enc;
    enc.push_back(static_cast<std::uint32_t>(g.n));
    enc.push_back(static_cast<std::uint32_t>(g.m()));
    enc.insert(enc.end(), search.best.begin(), search.best.end());
    return {enc, search.best_perm};
}

} // namespace

std::vector<std::uint32_t> canonical_encoding(const Multigraph& g) {
    return canonical_with_perm(g).first;
}

Multigraph canonical_form(const Multigraph& g) {
    auto [enc, perm] = canonical_with_perm(g); // perm[k] = old vertex labeled k
    std::vector<int> label(g.n);
    for (int k = 0; k < g.n; ++k) label[perm[k]] = k;
    std::vector<std::pair<int, int>> endpoints;
    endpoints.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        int a = label[u], b = label[v];
        endpoints.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(endpoints.begin(), endpoints.end());
    return Multigraph::create(g.n, endpoints);
}

bool are_isomorphic(const Multigraph& g, const Multigraph& h) {
    if (g.n > kAutBudget || h.n > kAutBudget)
        throw BudgetError("are_isomorphic: graphs too large for brute force");
    if (g.n != h.n || g.m() != h.m()) return false;
    auto profile = [](const Multigraph& x) {
        std::vector<std::pair<int, int>> p; // (degree, loops) per vertex
        std::vector<int> loops(x.n, 0);
        for (int e = 0; e < x.m(); ++e)
            if (x.is_loop(e)) ++loops[x.edges[e].first];
        for (int v = 0; v < x.n; ++v) p.emplace_back(x.degree(v), loops[v]);
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(g) != profile(h)) return false;
    return canonical_encoding(g) == canonical_encoding(h);
}

namespace {

void vertex_aut_dfs(const std::vector<std::vector<std::uint8_t>>& mult, int n, int depth,
                    std::vector<int>& image, std::vector<char>& used,
                    std::vector<std::vector<int>>& out) {
    if (depth == n) {
        out.push_back(image);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (mult[v][v] != mult[depth][depth]) continue;
        bool ok = true;
        for (int i = 0; i < depth && ok; ++i) ok = mult[image[i]][v] == mult[i][depth];
        if (!ok) continue;
        used[v] = 1;
        image[depth] = v;
        vertex_aut_dfs(mult, n, depth + 1, image, used, out);
        used[v] = 0;
    }
}

// Groups edge indices by normalized endpoint pair.
std::vector<std::vector<int>> parallel_classes(const Multigraph& g,
                                               std::vector<std::pair<int, int>>& keys) {
    std::vector<std::pair<std::pair<int, int>, int>> tagged;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        tagged.push_back({{std::min(u, v), std::max(u, v)}, e});
    }
    std::sort(tagged.begin(), tagged.end());
    std::vector<std::vector<int>> classes;
    keys.clear();
    for (auto& [key, e] : tagged) {
        if (keys.empty() || keys.back() != key) {
            keys.push_back(key);
            classes.emplace_back();
        }
        classes.back().push_back(e);
    }
    return classes;
}

void edge_perm_product(const std::vector<std::vector<int>>& from_classes,
                       const std::vector<std::vector<int>>& to_classes, std::size_t idx,
                       std::vector<int>& eperm, std::vector<std::vector<int>>& out) {
    if (idx == from_classes.size()) {
        out.push_back(eperm);
        return;
    }
    const auto& src = from_classes[idx];
    std::vector<int> tgt = to_classes[idx];
    std::sort(tgt.begin(), tgt.end());
    do {
        for (std::size_t i = 0; i < src.size(); ++i) eperm[src[i]] = tgt[i];
        edge_perm_product(from_classes, to_classes, idx + 1, eperm, out);
    } while (std::next_permutation(tgt.begin(), tgt.end()));
}

} // namespace

std::vector<GraphAut> automorphisms(const Multigraph& g) {
    if (g.n > kAutBudget)
        throw BudgetError("automorphisms: graph too large for brute force");
    auto mult = mult_matrix(g);
    std::vector<std::vector<int>> vperms;
    std::vector<int> image(g.n);
    std::vector<char> used(g.n, 0);
    vertex_aut_dfs(mult, g.n, 0, image, used, vperms);

    std::vector<std::pair<int, int>> keys;
    auto classes = parallel_classes(g, keys);

    std::vector<GraphAut> out;
    for (auto& vp : vperms) {
        // Image class of each source class under vp.
        std::vector<std::vector<int>> to_classes(classes.size());
        bool ok = true;
        for (std::size_t c = 0; c < classes.size() && ok; ++c) {
            auto [u, v] = keys[c];
            std::pair<int, int> ikey{std::min(vp[u], vp[v]), std::max(vp[u], vp[v])};
            auto it = std::lower_bound(keys.begin(), keys.end(), ikey);
            ok = it != keys.end() && *it == ikey;
            if (ok) to_classes[c] = classes[it - keys.begin()];
        }
        if (!ok) continue;
        std::vector<std::vector<int>> eperms;
        std::vector<int> eperm(g.m());
        edge_perm_product(classes, to_classes, 0, eperm, eperms);
        for (auto& ep : eperms) out.push_back(GraphAut{vp, ep});
    }
    return out;
}

std::vector<DartAut> dart_automorphisms(const Multigraph& g) {
    auto pairs = automorphisms(g);
    std::vector<int> loops;
    for (int e = 0; e < g.m(); ++e)
        if (g.is_loop(e)) loops.push_back(e);

    std::vector<DartAut> out;
    for (auto& aut : pairs) {
        std::vector<int> base(2 * g.m(), -1);
        for (int e = 0; e < g.m(); ++e) {
            int f = aut.eperm[e];
            if (g.is_loop(e)) {
                base[2 * e] = 2 * f; // loop orientation varied below
                base[2 * e + 1] = 2 * f + 1;
            } else {
                int u = g.edges[e].first;
                if (g.edges[f].first == aut.vperm[u]) {
                    base[2 * e] = 2 * f;
                    base[2 * e + 1] = 2 * f + 1;
                } else {
                    base[2 * e] = 2 * f + 1;
                    base[2 * e + 1] = 2 * f;
                }
            }
        }
        for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << loops.size()); ++sel) {
            DartAut d;
            d.vperm = aut.vperm;
            d.eperm = aut.eperm;
            d.dperm = base;
            for (std::size_t i = 0; i < loops.size(); ++i) {
                if (sel >> i & 1) {
                    int e = loops[i];
                    std::swap(d.dperm[2 * e], d.dperm[2 * e + 1]);
                }
            }
            out.push_back(std::move(d));
        }
    }
    return out;
}

} // namespace clstrata
