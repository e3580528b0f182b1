// Enumeration and equivalence classification of CL-structures.
#pragma once

#include <string>
#include <vector>

#include "clstrata/ribbon.hpp"

namespace clstrata {

/// Which equivalence generators to quotient by.
struct GeneratorSet {
    bool complement = true;     // per-2-connected-component twist complement
    bool flips = true;          // vertex flips
    bool automorphisms = true;  // graph automorphism relabelings

    std::vector<std::string> names() const;
    static GeneratorSet parse(const std::string& csv);
};

/// All twist assignments whose ribbon over rot is a strip, ascending.
/// Budget: m <= 24.
std::vector<EdgeMask> enumerate_strips(const Multigraph& g, const RotationSystem& rot);

/// Full closure of {r} under the selected generators, as explicit structures.
/// Exponential in general; intended for small graphs and tests.
std::vector<RibbonStructure> equivalence_orbit(const RibbonStructure& r,
                                               const GeneratorSet& gens = {});

/// Equivalence class of strips surveyed over one fixed rotation.
struct CLStructureClass {
    RibbonStructure representative; // surveyed rotation, least member twists
    std::vector<EdgeMask> members;  // all class members within the survey, ascending
    int orbit_size = 0;             // members.size()
    bool orientable = false;
    int genus_or_crosscap = 0;
};

struct ClassificationReport {
    std::string graph_name;
    int n = 0, m = 0, q = 0;
    int raw_strips = 0;
    int orientable_raw = 0;
    std::vector<CLStructureClass> classes; // orientable classes, by representative twists
    GeneratorSet generators;
};

/// Enumerates strips over the given rotation and partitions the orientable
/// ones into equivalence classes under the selected generators.
ClassificationReport classify(const Multigraph& g, const RotationSystem& rot,
                              const GeneratorSet& gens = {},
                              const std::string& name = "");

/// Named reference graph with its surveyed rotation.
struct CatalogEntry {
    std::string name;
    std::vector<std::string> tags;
    Multigraph graph;
    RotationSystem rotation;
};

/// The seven cubic rank-4 graphs with stored planar (or drawn) rotations,
/// the two-loop torus bouquet, the Petersen graph, the rank-2 pair of
/// two-vertex graphs, and the failing two-link join configuration.
std::vector<CatalogEntry> catalog();

const CatalogEntry& catalog_entry(const std::string& name);

/// Audits every orientable class representative: 2-edge cycles must have both
/// edges twisted, 3-edge cycles exactly two.  For planar-rotation reports.
bool verify_cor_2v(const ClassificationReport& report);

} // namespace clstrata
