// Multigraphs with loops and parallel edges, stored as dart (half-edge) pairs.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clstrata {

/// Subset of edge indices as a bitmask; bit i = edge i.  Graphs are capped at
/// 64 edges so a plain 64-bit word always suffices.
using EdgeMask = std::uint64_t;

constexpr int kMaxEdges = 64;

/// Thrown when an operation would exceed its documented brute-force budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected multigraph.  Edge i owns darts 2i and 2i+1; dart 2i sits at the
/// first endpoint, 2i+1 at the second.  Loops own two darts at one vertex.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> darts; // per vertex, ascending dart ids

    static Multigraph create(int n, const std::vector<std::pair<int, int>>& endpoints);

    int m() const { return static_cast<int>(edges.size()); }
    int dart_count() const { return 2 * m(); }

    static int mate(int dart) { return dart ^ 1; }
    static int edge_of(int dart) { return dart >> 1; }

    int endpoint(int dart) const {
        const auto& e = edges[dart >> 1];
        return (dart & 1) ? e.second : e.first;
    }
    int other_endpoint(int dart) const { return endpoint(dart ^ 1); }

    int degree(int v) const { return static_cast<int>(darts[v].size()); }
    const std::vector<int>& darts_at(int v) const { return darts[v]; }

    bool is_loop(int edge) const { return edges[edge].first == edges[edge].second; }
    EdgeMask loop_mask() const;
    EdgeMask all_edges_mask() const {
        return m() == kMaxEdges ? ~EdgeMask{0} : (EdgeMask{1} << m()) - 1;
    }

    bool is_connected() const;
};

/// q(G) = m - n + 1 for a connected graph.
int cycle_rank(const Multigraph& g);

/// Edges whose removal disconnects the graph.  Loops are never bridges.
EdgeMask bridges(const Multigraph& g);

/// Edge sets of the 2-connected components: the non-vertex components left
/// after deleting all bridges.  Sorted by least edge index.
std::vector<EdgeMask> two_connected_components(const Multigraph& g);

/// Result of reducing a graph to its cyclic part.
struct CyclicPart {
    Multigraph graph;
    // For each surviving edge, the original edges it absorbed, in path order.
    std::vector<std::vector<int>> edge_origins;
    // For each surviving dart, the original dart it descends from.
    std::vector<int> dart_origin;
    // Surviving vertex -> original vertex id.
    std::vector<int> vertex_origin;
    // Original vertex -> surviving vertex id, or -1 if contracted away.
    std::vector<int> vertex_map;
};

/// Deletes pendant edges, then smooths degree-2 vertices by merging their two
/// incident edges.  A tree collapses to a single vertex; a standalone cycle
/// becomes one vertex carrying one loop.
CyclicPart cyclic_part(const Multigraph& g);

/// Automorphism as a (vertex permutation, edge permutation) pair.
struct GraphAut {
    std::vector<int> vperm;
    std::vector<int> eperm;
};

/// Automorphism refined to dart level (loops may swap their two darts).
struct DartAut {
    std::vector<int> vperm;
    std::vector<int> eperm;
    std::vector<int> dperm;
};

/// All (vertex, edge) automorphism pairs; brute force, requires n <= 12.
std::vector<GraphAut> automorphisms(const Multigraph& g);

/// All dart-level automorphisms (each GraphAut times loop orientations).
std::vector<DartAut> dart_automorphisms(const Multigraph& g);

bool are_isomorphic(const Multigraph& g, const Multigraph& h);

/// Label-invariant encoding: minimum column-major adjacency encoding over all
/// vertex permutations.  Equal encodings <=> isomorphic graphs.
std::vector<std::uint32_t> canonical_encoding(const Multigraph& g);

/// Rebuilds the canonically labeled graph from its own encoding.
Multigraph canonical_form(const Multigraph& g);

/// All connected loopless cubic multigraphs with n=6, m=9 (cycle rank 4),
/// one canonical representative per isomorphism class, in canonical order.
std::vector<Multigraph> enumerate_cubic_q4();

/// All connected multigraphs (loops allowed) with exactly m edges, one
/// canonical representative per isomorphism class, in canonical order.
std::vector<Multigraph> connected_multigraphs_with_edges(int m);

} // namespace clstrata
