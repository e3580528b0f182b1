// Orientable realizability: screens, constructive criteria, exhaustive oracle.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clstrata/cl_structures.hpp"
#include "clstrata/ribbon.hpp"

namespace clstrata {

enum class Verdict { Yes, No, Unknown };

struct RealizabilityReport {
    Verdict verdict = Verdict::Unknown;
    std::string criterion;
    std::optional<RibbonStructure> witness; // present iff verdict == Yes
};

struct OracleOptions {
    // Rotation-systems (mod vertex reversal) times twist assignments, on the
    // cyclic part.  The default matches the documented 2^26 contract.
    std::uint64_t budget = std::uint64_t{1} << 26;
};

/// Cost the oracle would incur on g's cyclic part.
std::uint64_t oracle_cost(const Multigraph& g);

/// Exhaustive search over rotation systems (one representative per vertex
/// reversal class) times twist assignments on the cyclic part.  Returns YES
/// with the canonically first witness, reattached to the full graph, or NO.
RealizabilityReport oracle_orientably_realizable(const Multigraph& g,
                                                 const OracleOptions& opts = {});

/// NO when the cyclic part has odd cycle rank; otherwise nothing.
std::optional<RealizabilityReport> screen_odd_q(const Multigraph& g);

/// NO when the cyclic part has a loop at a degree-3 vertex; otherwise nothing.
std::optional<RealizabilityReport> screen_loop_deg3(const Multigraph& g);

/// Growable catalog of graphs known not to be orientably realizable.
struct KnownBadCatalog {
    std::vector<Multigraph> graphs;

    static KnownBadCatalog seeded(); // contains the three-2-cycle census graph
    void add(const Multigraph& g);
    bool contains_isomorphic(const Multigraph& g) const;
};

/// NO when some bridge splits g into a side whose cyclic part matches a
/// known non-realizable graph; otherwise nothing.
std::optional<RealizabilityReport> screen_bridge_nonrealizable(
    const Multigraph& g, const KnownBadCatalog& known_bad);

/// Witness strip on a piece, with a map from piece vertices to global ids.
struct TreePart {
    RibbonStructure strip;
    std::vector<int> to_global;
};

/// Merges witness strips whose pairwise intersections are single vertices and
/// whose incidence graph is a tree.  Result is an orientable strip.
RibbonStructure compose_tree(const std::vector<TreePart>& parts);

/// Connecting edge between the two sides of a join: (vertex in g1, vertex in g2).
struct Link {
    int a;
    int b;
};

/// Joins two orientable strips on disjoint graphs by k = 1 or 3 edges.  For
/// k = 3 the link twists follow the three parity cases of the connecting
/// cycles; k = 2 is rejected.  Result is an orientable strip.
RibbonStructure connect_two(const RibbonStructure& g1_witness,
                            const RibbonStructure& g2_witness,
                            const std::vector<Link>& links);

/// Joins two trees by an odd number of all-twisted edges.
RibbonStructure join_trees(const Multigraph& t1, const Multigraph& t2,
                           const std::vector<Link>& links);

/// The two-link join of two theta-strips with the forced equal-twist links:
/// both parity variants, each an orientable patch that fails to be a strip.
std::vector<RibbonStructure> fig14_k2_structures();

struct DecideOptions {
    bool criteria_only = false;
    OracleOptions oracle;
};

/// Screens first, then the oracle (unless criteria_only).
RealizabilityReport decide_orientably_realizable(const Multigraph& g,
                                                 const KnownBadCatalog& known_bad,
                                                 const DecideOptions& opts = {});

} // namespace clstrata
