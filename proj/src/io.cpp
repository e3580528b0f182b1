#include "clstrata/io.hpp"

#include <fstream>
#include <sstream>

namespace clstrata::io {

namespace {

// Reads lines, strips '#' comments, and hands back non-blank lines with
// their 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (blank) continue;
            out = line;
            return true;
        }
        return false;
    }

    int line_no() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

} // namespace

Multigraph read_graph(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "missing 'n m' header");
    std::istringstream header(line);
    int n = 0, m = 0;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
        throw ParseError(reader.line_no(), "expected 'n m'");
    if (n <= 0) throw ParseError(reader.line_no(), "vertex count must be positive");
    if (m < 0 || m > kMaxEdges) throw ParseError(reader.line_no(), "edge count out of range");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw ParseError(reader.line_no() + 1, "missing edge line");
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v) || (row >> extra)) throw ParseError(reader.line_no(), "expected 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(reader.line_no(), "vertex out of range");
        edges.emplace_back(u, v);
    }
    if (reader.next(line)) throw ParseError(reader.line_no(), "trailing content");
    return Multigraph::create(n, edges);
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

std::string graph_to_string(const Multigraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

std::string mask_to_bitstring(EdgeMask mask, int m) {
    std::string s(m, '0');
    for (int i = 0; i < m; ++i)
        if (mask >> i & 1) s[i] = '1';
    return s;
}

EdgeMask bitstring_to_mask(const std::string& s) {
    if (s.size() > kMaxEdges) throw std::invalid_argument("bitstring too long");
    EdgeMask mask = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            mask |= EdgeMask{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bitstring must be 0/1");
    }
    return mask;
}

namespace {

// Graph block for a ribbon file, without the trailing-content check.
Multigraph read_graph_block(LineReader& reader, std::string& pending, bool& have_pending) {
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "missing 'n m' header");
    std::istringstream header(line);
    int n = 0, m = 0;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
        throw ParseError(reader.line_no(), "expected 'n m'");
    if (n <= 0) throw ParseError(reader.line_no(), "vertex count must be positive");
    if (m < 0 || m > kMaxEdges) throw ParseError(reader.line_no(), "edge count out of range");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "missing edge line");
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v) || (row >> extra)) throw ParseError(reader.line_no(), "expected 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(reader.line_no(), "vertex out of range");
        edges.emplace_back(u, v);
    }
    have_pending = false;
    pending.clear();
    return Multigraph::create(n, edges);
}

} // namespace

RibbonStructure read_ribbon(std::istream& in) {
    LineReader reader(in);
    std::string pending;
    bool have_pending = false;
    Multigraph g = read_graph_block(reader, pending, have_pending);

    RotationSystem rot;
    rot.at.assign(g.n, {});
    std::vector<char> seen(g.n, 0);
    for (int i = 0; i < g.n; ++i) {
        std::string line;
        if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "missing rotation line");
        std::istringstream row(line);
        std::string keyword;
        row >> keyword;
        if (keyword != "rotation") throw ParseError(reader.line_no(), "expected 'rotation v:'");
        std::string vtoken;
        row >> vtoken;
        if (vtoken.empty() || vtoken.back() != ':')
            throw ParseError(reader.line_no(), "expected 'rotation v:'");
        int v = -1;
        try {
            v = std::stoi(vtoken.substr(0, vtoken.size() - 1));
        } catch (...) {
            throw ParseError(reader.line_no(), "bad vertex in rotation line");
        }
        if (v < 0 || v >= g.n) throw ParseError(reader.line_no(), "rotation vertex out of range");
        if (seen[v]) throw ParseError(reader.line_no(), "duplicate rotation line");
        seen[v] = 1;
        int d;
        while (row >> d) rot.at[v].push_back(d);
        if (!row.eof()) throw ParseError(reader.line_no(), "bad dart in rotation line");
    }

    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "missing twists line");
    std::istringstream row(line);
    std::string keyword, bits;
    row >> keyword;
    if (keyword != "twists:") throw ParseError(reader.line_no(), "expected 'twists:'");
    row >> bits;
    if (static_cast<int>(bits.size()) != g.m())
        throw ParseError(reader.line_no(), "twists bitstring must have one bit per edge");
    EdgeMask twists;
    try {
        twists = bitstring_to_mask(bits);
    } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line_no(), e.what());
    }
    if (reader.next(line)) throw ParseError(reader.line_no(), "trailing content");
    try {
        return make_ribbon(std::move(g), std::move(rot), twists);
    } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line_no(), e.what());
    }
}

RibbonStructure read_ribbon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_ribbon(in);
}

void write_ribbon(std::ostream& out, const RibbonStructure& r) {
    write_graph(out, r.graph);
    for (int v = 0; v < r.graph.n; ++v) {
        out << "rotation " << v << ':';
        for (int d : r.rotation.at[v]) out << ' ' << d;
        out << '\n';
    }
    out << "twists: " << mask_to_bitstring(r.twists, r.graph.m()) << '\n';
}

std::string ribbon_to_string(const RibbonStructure& r) {
    std::ostringstream os;
    write_ribbon(os, r);
    return os.str();
}

std::string to_dot(const RibbonStructure& r, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < r.graph.n; ++v) os << "  " << v << ";\n";
    for (int e = 0; e < r.graph.m(); ++e) {
        auto [u, v] = r.graph.edges[e];
        const char* label = (r.twists >> e & 1) ? "x" : "=";
        os << "  " << u << " -- " << v << " [label=\"" << label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::json ribbon_to_json(const RibbonStructure& r) {
    nlohmann::json j;
    j["n"] = r.graph.n;
    j["m"] = r.graph.m();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : r.graph.edges) j["edges"].push_back({u, v});
    j["rotation"] = r.rotation.at;
    j["twists"] = mask_to_bitstring(r.twists, r.graph.m());
    return j;
}

RibbonStructure ribbon_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Multigraph g = Multigraph::create(n, edges);
    RotationSystem rot;
    rot.at = j.at("rotation").get<std::vector<std::vector<int>>>();
    EdgeMask twists = bitstring_to_mask(j.at("twists").get<std::string>());
    return make_ribbon(std::move(g), std::move(rot), twists);
}

nlohmann::json classification_to_json(const ClassificationReport& report) {
    nlohmann::json j;
    j["graph"] = report.graph_name;
    j["n"] = report.n;
    j["m"] = report.m;
    j["q"] = report.q;
    j["raw_strips"] = report.raw_strips;
    j["orientable_raw"] = report.orientable_raw;
    j["orientable_classes"] = nlohmann::json::array();
    for (const auto& cls : report.classes) {
        nlohmann::json c;
        c["twists"] = mask_to_bitstring(cls.representative.twists, report.m);
        c["genus"] = cls.genus_or_crosscap;
        c["orbit_size"] = cls.orbit_size;
        j["orientable_classes"].push_back(std::move(c));
    }
    j["generators_used"] = report.generators.names();
    return j;
}

nlohmann::json realizability_to_json(const RealizabilityReport& report) {
    nlohmann::json j;
    switch (report.verdict) {
        case Verdict::Yes: j["verdict"] = "YES"; break;
        case Verdict::No: j["verdict"] = "NO"; break;
        case Verdict::Unknown: j["verdict"] = "UNKNOWN"; break;
    }
    j["criterion"] = report.criterion;
    j["witness"] = report.witness ? ribbon_to_json(*report.witness) : nlohmann::json(nullptr);
    return j;
}

KnownBadCatalog read_known_bad(std::istream& in) {
    // Collect non-comment lines with their numbers, then parse block by block.
    std::vector<std::pair<int, std::string>> lines;
    {
        LineReader reader(in);
        std::string line;
        while (reader.next(line)) lines.emplace_back(reader.line_no(), line);
    }
    KnownBadCatalog catalog;
    std::size_t i = 0;
    while (i < lines.size()) {
        std::istringstream header(lines[i].second);
        int n = 0, m = 0;
        std::string extra;
        if (!(header >> n >> m) || (header >> extra))
            throw ParseError(lines[i].first, "expected 'n m'");
        ++i;
        std::vector<std::pair<int, int>> edges;
        for (int k = 0; k < m; ++k, ++i) {
            if (i >= lines.size())
                throw ParseError(lines.back().first + 1, "missing edge line");
            std::istringstream row(lines[i].second);
            int u = 0, v = 0;
            if (!(row >> u >> v) || (row >> extra))
                throw ParseError(lines[i].first, "expected 'u v'");
            edges.emplace_back(u, v);
        }
        catalog.add(Multigraph::create(n, edges));
    }
    return catalog;
}

void write_known_bad(std::ostream& out, const KnownBadCatalog& catalog) {
    int index = 0;
    for (const auto& g : catalog.graphs) {
        out << "# graph " << index++ << '\n';
        write_graph(out, g);
    }
}

} // namespace clstrata::io
