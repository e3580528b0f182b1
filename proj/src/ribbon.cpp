// Boundary tracing, orientability, Euler bookkeeping, flips, contractions.
#include "clstrata/ribbon.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace clstrata {

void check_rotation(const Multigraph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.at.size()) != g.n)
        throw std::invalid_argument("rotation: wrong vertex count");
    std::vector<char> seen(g.dart_count(), 0);
    for (int v = 0; v < g.n; ++v) {
        for (int d : rot.at[v]) {
            if (d < 0 || d >= g.dart_count())
                throw std::invalid_argument("rotation: dart out of range");
            if (seen[d]) throw std::invalid_argument("rotation: dart repeated");
            seen[d] = 1;
            if (g.endpoint(d) != v)
                throw std::invalid_argument("rotation: dart at wrong vertex");
        }
    }
    for (int d = 0; d < g.dart_count(); ++d)
        if (!seen[d]) throw std::invalid_argument("rotation: dart missing");
}

RotationSystem sorted_rotation(const Multigraph& g) {
    RotationSystem rot;
    rot.at = g.darts;
    return rot;
}

RibbonStructure make_ribbon(Multigraph g, RotationSystem rot, EdgeMask twists) {
    check_rotation(g, rot);
    if (g.m() < kMaxEdges && (twists >> g.m()) != 0)
        throw std::invalid_argument("twists set beyond edge count");
    return RibbonStructure{std::move(g), std::move(rot), twists};
}

namespace detail {

RotationMaps build_maps(const Multigraph& g, const RotationSystem& rot) {
    RotationMaps maps;
    maps.succ.assign(g.dart_count(), -1);
    maps.pred.assign(g.dart_count(), -1);
    for (const auto& cycle : rot.at) {
        const int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; ++i) {
            int d = cycle[i];
            int s = cycle[(i + 1) % k];
            maps.succ[d] = s;
            maps.pred[s] = d;
        }
    }
    return maps;
}

// Signed-dart successor: cross the edge band (flipping sides on a twist),
// then turn along the vertex disk, forward on side 0, backward on side 1.
inline int step_state(const RotationMaps& maps, EdgeMask twists, int state) {
    int d = state >> 1;
    int side = (state & 1) ^ static_cast<int>(twists >> (d >> 1) & 1);
    int arrived = d ^ 1;
    int next = side == 0 ? maps.succ[arrived] : maps.pred[arrived];
    return next << 1 | side;
}

int trace_components(const Multigraph& g, const RotationMaps& maps, EdgeMask twists,
                     std::vector<char>& scratch) {
    const int states = 2 * g.dart_count();
    if (states == 0) return 1; // edgeless vertex: a disk
    scratch.assign(states, 0);
    int orbits = 0;
    for (int s0 = 0; s0 < states; ++s0) {
        if (scratch[s0]) continue;
        ++orbits;
        int s = s0;
        do {
            scratch[s] = 1;
            s = step_state(maps, twists, s);
        } while (s != s0);
    }
    if (orbits % 2 != 0)
        throw std::logic_error("boundary trace: odd orbit count");
    return orbits / 2;
}

int trace_components(const Multigraph& g, const RotationMaps& maps, EdgeMask twists) {
    std::vector<char> scratch;
    return trace_components(g, maps, twists, scratch);
}

} // namespace detail

namespace {

// Direction reversal on signed darts: same geometric boundary arc, walked the
// other way; conjugates the successor map to its inverse.
inline int reverse_state(EdgeMask twists, int state) {
    int d = state >> 1;
    int side = (state & 1) ^ static_cast<int>(twists >> (d >> 1) & 1) ^ 1;
    return (d ^ 1) << 1 | side;
}

} // namespace

BoundaryReport boundary(const RibbonStructure& r) {
    if (!r.graph.is_connected()) throw std::invalid_argument("boundary needs a connected graph");
    auto maps = detail::build_maps(r.graph, r.rotation);
    const int states = 2 * r.graph.dart_count();

    BoundaryReport report;
    std::vector<int> orbit_of(states, -1);
    for (int s0 = 0; s0 < states; ++s0) {
        if (orbit_of[s0] != -1) continue;
        std::vector<SignedDart> walk;
        int s = s0;
        do {
            orbit_of[s] = static_cast<int>(report.walks.size());
            walk.push_back(SignedDart{s >> 1, s & 1});
            s = detail::step_state(maps, r.twists, s);
        } while (s != s0);
        report.walks.push_back(std::move(walk));
    }
    if (report.walks.size() % 2 != 0)
        throw std::logic_error("boundary trace: odd orbit count");
    report.components = states == 0 ? 1 : static_cast<int>(report.walks.size()) / 2;

    // Canonical representative set: scan orbits in discovery order, keep each
    // orbit whose reversal partner has not been kept yet.
    std::vector<char> kept(report.walks.size(), 0), excluded(report.walks.size(), 0);
    for (std::size_t i = 0; i < report.walks.size(); ++i) {
        if (excluded[i]) continue;
        int first = report.walks[i].front().dart << 1 | report.walks[i].front().side;
        int partner = orbit_of[reverse_state(r.twists, first)];
        if (partner == static_cast<int>(i))
            throw std::logic_error("boundary trace: self-paired walk");
        kept[i] = 1;
        excluded[partner] = 1;
    }

    // Each edge is traversed exactly twice across the kept walks; compare the
    // departing darts of those two traversals.
    std::vector<int> first_dart(r.graph.m(), -1);
    report.edge_direction.assign(r.graph.m(), EdgeTraversal::Opposite);
    for (std::size_t i = 0; i < report.walks.size(); ++i) {
        if (!kept[i]) continue;
        for (const auto& sd : report.walks[i]) {
            int e = Multigraph::edge_of(sd.dart);
            if (first_dart[e] == -1)
                first_dart[e] = sd.dart;
            else
                report.edge_direction[e] =
                    first_dart[e] == sd.dart ? EdgeTraversal::Same : EdgeTraversal::Opposite;
        }
    }
    return report;
}

int boundary_components(const RibbonStructure& r) {
    if (!r.graph.is_connected()) throw std::invalid_argument("boundary needs a connected graph");
    auto maps = detail::build_maps(r.graph, r.rotation);
    return detail::trace_components(r.graph, maps, r.twists);
}

bool is_strip(const RibbonStructure& r) { return boundary_components(r) == 1; }

namespace {

bool sign_assignment_orientable(const Multigraph& g, EdgeMask twists) {
    // Loops are their own cycles: any twisted loop kills orientability.
    for (int e = 0; e < g.m(); ++e)
        if (g.is_loop(e) && (twists >> e & 1)) return false;
    std::vector<int> sign(g.n, -1);
    for (int root = 0; root < g.n; ++root) {
        if (sign[root] != -1) continue;
        sign[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.darts_at(v)) {
                int w = g.other_endpoint(d);
                if (w == v) continue;
                int want = sign[v] ^ static_cast<int>(twists >> Multigraph::edge_of(d) & 1);
                if (sign[w] == -1) {
                    sign[w] = want;
                    stack.push_back(w);
                } else if (sign[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool parity_orientable(const Multigraph& g, EdgeMask twists) {
    auto basis = fundamental_basis(g);
    for (EdgeMask cycle : basis.cycles)
        if (std::popcount(cycle & twists) % 2 != 0) return false;
    return true;
}

} // namespace

bool is_orientable(const RibbonStructure& r) {
    if (!r.graph.is_connected())
        throw std::invalid_argument("is_orientable needs a connected graph");
    bool by_signs = sign_assignment_orientable(r.graph, r.twists);
    if (by_signs != parity_orientable(r.graph, r.twists))
        throw std::logic_error("orientability routes disagree");
    return by_signs;
}

int cycle_parity(const RibbonStructure& r, EdgeMask cycle) {
    if (!is_cycle_vector(r.graph, cycle))
        throw std::invalid_argument("cycle_parity: not a cycle vector");
    return std::popcount(cycle & r.twists) % 2;
}

EulerData closed_euler(const RibbonStructure& r) {
    EulerData data;
    int b = boundary_components(r);
    data.chi = r.graph.n - r.graph.m() + b;
    data.orientable = is_orientable(r);
    if (data.orientable) {
        if ((2 - data.chi) % 2 != 0)
            throw std::logic_error("closed_euler: odd chi on an orientable surface");
        data.genus_or_crosscap = (2 - data.chi) / 2;
    } else {
        data.genus_or_crosscap = 2 - data.chi;
    }
    return data;
}

RibbonStructure vertex_flip(const RibbonStructure& r, int v) {
    if (v < 0 || v >= r.graph.n) throw std::invalid_argument("vertex_flip: vertex out of range");
    RibbonStructure out = r;
    std::reverse(out.rotation.at[v].begin(), out.rotation.at[v].end());
    for (int d : r.graph.darts_at(v)) {
        int e = Multigraph::edge_of(d);
        if (!r.graph.is_loop(e)) out.twists ^= EdgeMask{1} << e; // loops toggle twice
    }
    return out;
}

EdgeMask same_direction_edges(const RibbonStructure& r) {
    auto report = boundary(r);
    if (report.components != 1)
        throw std::invalid_argument("same_direction_edges is defined on strips only");
    EdgeMask mask = 0;
    for (int e = 0; e < r.graph.m(); ++e)
        if (report.edge_direction[e] == EdgeTraversal::Same) mask |= EdgeMask{1} << e;
    return mask;
}

RibbonStructure contract_edge_strip(const RibbonStructure& r, int edge) {
    if (edge < 0 || edge >= r.graph.m())
        throw std::invalid_argument("contract_edge_strip: edge out of range");
    if (r.graph.is_loop(edge))
        throw std::invalid_argument("contract_edge_strip: cannot contract a loop");

    RibbonStructure cur = r;
    if (cur.twists >> edge & 1) {
        auto [u, v] = cur.graph.edges[edge];
        cur = vertex_flip(cur, std::min(u, v));
    }

    const Multigraph& g = cur.graph;
    auto [eu, ev] = g.edges[edge];
    int keep = std::min(eu, ev), gone = std::max(eu, ev);
    int dart_keep = g.endpoint(2 * edge) == keep ? 2 * edge : 2 * edge + 1;
    int dart_gone = dart_keep ^ 1;

    // Splice: in keep's cycle, replace the contracted dart by gone's cycle
    // read from the successor of its own contracted dart.
    auto maps = detail::build_maps(g, cur.rotation);
    std::vector<int> merged;
    for (int d : cur.rotation.at[keep]) {
        if (d != dart_keep) {
            merged.push_back(d);
            continue;
        }
        if (g.degree(gone) > 1) {
            int x = maps.succ[dart_gone];
            while (x != dart_gone) {
                merged.push_back(x);
                x = maps.succ[x];
            }
        }
    }

    // Renumber: vertex `gone` merges into `keep`; edge `edge` disappears.
    auto new_vertex = [&](int v) {
        if (v == gone) return keep;
        return v > gone ? v - 1 : v;
    };
    auto new_dart = [&](int d) {
        int e = Multigraph::edge_of(d);
        return e > edge ? d - 2 : d;
    };
    std::vector<std::pair<int, int>> endpoints;
    for (int e = 0; e < g.m(); ++e) {
        if (e == edge) continue;
        endpoints.emplace_back(new_vertex(g.edges[e].first), new_vertex(g.edges[e].second));
    }
    Multigraph contracted = Multigraph::create(g.n - 1, endpoints);

    RotationSystem rot;
    rot.at.assign(contracted.n, {});
    for (int v = 0; v < g.n; ++v) {
        if (v == keep || v == gone) continue;
        std::vector<int> cycle;
        for (int d : cur.rotation.at[v]) cycle.push_back(new_dart(d));
        rot.at[new_vertex(v)] = std::move(cycle);
    }
    std::vector<int> spliced;
    for (int d : merged) spliced.push_back(new_dart(d));
    rot.at[keep] = std::move(spliced);

    EdgeMask low = cur.twists & ((EdgeMask{1} << edge) - 1);
    EdgeMask high = cur.twists >> (edge + 1) << edge;
    return make_ribbon(std::move(contracted), std::move(rot), low | high);
}

std::string rotation_key(const RotationSystem& rot) {
    std::ostringstream os;
    for (const auto& cycle : rot.at) {
        os << '[';
        if (!cycle.empty()) {
            auto min_it = std::min_element(cycle.begin(), cycle.end());
            std::size_t start = min_it - cycle.begin();
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i) os << ' ';
                os << cycle[(start + i) % cycle.size()];
            }
        }
        os << ']';
    }
    return os.str();
}

std::string ribbon_key(const RibbonStructure& r) {
    std::ostringstream os;
    os << rotation_key(r.rotation) << '|' << r.twists;
    return os.str();
}

} // namespace clstrata
