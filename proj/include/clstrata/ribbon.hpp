// Twisted ribbon structures: rotation system + twist bit per edge.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clstrata/cycle_space.hpp"
#include "clstrata/multigraph.hpp"

namespace clstrata {

/// Cyclic order of darts at each vertex.
struct RotationSystem {
    std::vector<std::vector<int>> at;

    bool operator==(const RotationSystem&) const = default;
};

/// Validates that every dart appears exactly once, at its endpoint.
void check_rotation(const Multigraph& g, const RotationSystem& rot);

/// Rotation listing darts in ascending order at each vertex.
RotationSystem sorted_rotation(const Multigraph& g);

/// A multigraph with an embedding (rotation) and a half-twist bit per edge.
struct RibbonStructure {
    Multigraph graph;
    RotationSystem rotation;
    EdgeMask twists = 0;
};

RibbonStructure make_ribbon(Multigraph g, RotationSystem rot, EdgeMask twists);

/// One step of a boundary walk: departing dart plus side (0 = front).
struct SignedDart {
    int dart;
    int side;
    bool operator==(const SignedDart&) const = default;
};

enum class EdgeTraversal { Same, Opposite };

/// Full orbit decomposition of the boundary walk successor map.  Walks come
/// in direction-reversed pairs, so the surface has walks.size()/2 boundary
/// circles.  edge_direction compares the two traversals of each edge within
/// the canonical representative set of walks.
struct BoundaryReport {
    std::vector<std::vector<SignedDart>> walks;
    int components = 0;
    std::vector<EdgeTraversal> edge_direction;
};

namespace detail {

/// Flattened successor/predecessor maps for fast boundary tracing.
struct RotationMaps {
    std::vector<int> succ;
    std::vector<int> pred;
};

RotationMaps build_maps(const Multigraph& g, const RotationSystem& rot);

/// Boundary component count only; no allocation beyond the scratch buffer.
int trace_components(const Multigraph& g, const RotationMaps& maps, EdgeMask twists,
                     std::vector<char>& scratch);

int trace_components(const Multigraph& g, const RotationMaps& maps, EdgeMask twists);

} // namespace detail

BoundaryReport boundary(const RibbonStructure& r);

/// Number of boundary circles (1 for the edgeless one-vertex disk).
int boundary_components(const RibbonStructure& r);

bool is_strip(const RibbonStructure& r);

/// True iff the ribbon surface is orientable: a vertex sign assignment
/// o : V -> Z2 with twist(e) = o(u) xor o(v) exists (loops force twist 0).
/// Cross-checked internally against fundamental cycle parities.
bool is_orientable(const RibbonStructure& r);

/// XOR of twist bits over a cycle vector; rejects non-cycle inputs.
int cycle_parity(const RibbonStructure& r, EdgeMask cycle);

struct EulerData {
    int chi = 0;
    bool orientable = false;
    int genus_or_crosscap = 0; // genus if orientable, else crosscap number
};

/// Euler characteristic of the closed surface obtained by capping every
/// boundary circle with a disc, plus its genus or crosscap number.
EulerData closed_euler(const RibbonStructure& r);

/// Reverses the rotation at v and toggles the twist of every non-loop edge
/// incident to v.  An involution that preserves boundary structure.
RibbonStructure vertex_flip(const RibbonStructure& r, int v);

/// Edges whose two boundary traversals run in the same direction.  Only
/// meaningful (and only allowed) on strips; empty iff orientable.
EdgeMask same_direction_edges(const RibbonStructure& r);

/// Contracts a non-loop edge strip, splicing the two rotations.  A twisted
/// edge is first normalized by flipping its smaller endpoint.  Preserves
/// boundary count and orientability.
RibbonStructure contract_edge_strip(const RibbonStructure& r, int edge);

/// Deterministic encoding used for hashing and lexicographic comparison:
/// per-vertex min-first normalized cycles, then the twist mask.
std::string ribbon_key(const RibbonStructure& r);
std::string rotation_key(const RotationSystem& rot);

} // namespace clstrata
