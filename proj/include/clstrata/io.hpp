// File formats: graph text, ribbon text, DOT, JSON.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "clstrata/cl_structures.hpp"
#include "clstrata/multigraph.hpp"
#include "clstrata/realizability.hpp"
#include "clstrata/ribbon.hpp"

namespace clstrata::io {

/// Malformed input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Graph text format: first non-comment line "n m", then m lines "u v"
// (0-based, edge index = line order); '#' starts a comment.
Multigraph read_graph(std::istream& in);
Multigraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Multigraph& g);
std::string graph_to_string(const Multigraph& g);

// Ribbon text format: graph block, then "rotation v: d d ..." per vertex,
// then "twists: <bitstring>" (character i = edge i).
RibbonStructure read_ribbon(std::istream& in);
RibbonStructure read_ribbon_file(const std::string& path);
void write_ribbon(std::ostream& out, const RibbonStructure& r);
std::string ribbon_to_string(const RibbonStructure& r);

std::string mask_to_bitstring(EdgeMask mask, int m);
EdgeMask bitstring_to_mask(const std::string& s);

/// DOT export: one drawn edge per edge, labeled "x" if twisted, "=" if not.
std::string to_dot(const RibbonStructure& r, const std::string& name = "G");

nlohmann::json ribbon_to_json(const RibbonStructure& r);
RibbonStructure ribbon_from_json(const nlohmann::json& j);

nlohmann::json classification_to_json(const ClassificationReport& report);
nlohmann::json realizability_to_json(const RealizabilityReport& report);

// Known-bad catalog file: concatenated graph blocks, each introduced by a
// "# graph <name>" comment.
KnownBadCatalog read_known_bad(std::istream& in);
void write_known_bad(std::ostream& out, const KnownBadCatalog& catalog);

} // namespace clstrata::io
