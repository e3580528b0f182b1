// GF(2) linear algebra over edge subsets: cycle space, cut space, bases.
#pragma once

#include <vector>

#include "clstrata/multigraph.hpp"

namespace clstrata {

/// Fundamental cycle basis relative to a deterministic spanning tree.
struct CycleBasis {
    EdgeMask tree = 0;                // spanning tree edges
    std::vector<int> cotree;          // non-tree edges, ascending
    std::vector<EdgeMask> cycles;     // fundamental cycle of cotree[i]
};

/// Spanning tree by lowest-dart-index search from vertex 0; one fundamental
/// cycle per co-tree edge.  Requires a connected graph.
CycleBasis fundamental_basis(const Multigraph& g);

/// Symmetric difference: GF(2) addition on the edge space.
inline EdgeMask sym_diff(EdgeMask a, EdgeMask b) { return a ^ b; }

/// True iff every vertex meets an even number of darts of s (loops count 2).
bool is_cycle_vector(const Multigraph& g, EdgeMask s);

/// Edges with exactly one endpoint in vs; loops never qualify.
EdgeMask vertex_cut(const Multigraph& g, const std::vector<int>& vs);

/// Rank of a set of GF(2) vectors.
int gf2_rank(std::vector<EdgeMask> vectors);

/// True iff v lies in the span of the given vectors.
bool gf2_in_span(const std::vector<EdgeMask>& basis, EdgeMask v);

/// All simple cycles (connected even subgraphs with every vertex of degree
/// exactly 2), as edge masks, ascending.  Exponential scan; small m only.
std::vector<EdgeMask> simple_cycles(const Multigraph& g);

} // namespace clstrata
