// Command implementations behind the clstrata binary.
#include "clstrata/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clstrata/cl_structures.hpp"
#include "clstrata/io.hpp"
#include "clstrata/multigraph.hpp"
#include "clstrata/realizability.hpp"
#include "clstrata/verify.hpp"

namespace clstrata::cli {

namespace {

int fail_usage(std::ostream& err, const std::string& message) {
    err << "error: " << message << '\n';
    return kExitUsage;
}

std::string mask_edges(const Multigraph& g, EdgeMask mask) {
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e < g.m(); ++e) {
        if (!(mask >> e & 1)) continue;
        if (!first) os << ' ';
        os << e;
        first = false;
    }
    return os.str();
}

} // namespace

int cmd_analyze(const std::string& graph_path, bool json, std::ostream& out,
                std::ostream& err) {
    try {
        Multigraph g = io::read_graph_file(graph_path);
        if (!g.is_connected()) return fail_usage(err, "graph must be connected");
        EdgeMask bridge_set = bridges(g);
        auto components = two_connected_components(g);
        auto cp = cyclic_part(g);
        bool odd_q = screen_odd_q(g).has_value();
        bool loop3 = screen_loop_deg3(g).has_value();

        if (json) {
            nlohmann::json j;
            j["n"] = g.n;
            j["m"] = g.m();
            j["q"] = cycle_rank(g);
            j["bridges"] = nlohmann::json::array();
            for (int e = 0; e < g.m(); ++e)
                if (bridge_set >> e & 1) j["bridges"].push_back(e);
            j["two_connected_components"] = nlohmann::json::array();
            for (EdgeMask comp : components) {
                nlohmann::json arr = nlohmann::json::array();
                for (int e = 0; e < g.m(); ++e)
                    if (comp >> e & 1) arr.push_back(e);
                j["two_connected_components"].push_back(std::move(arr));
            }
            j["cyclic_part"] = {{"n", cp.graph.n}, {"m", cp.graph.m()},
                                {"q", cycle_rank(cp.graph)}};
            j["screens"] = {{"odd_q", odd_q}, {"loop_at_degree_3", loop3}};
            out << j.dump(2) << '\n';
        } else {
            out << "n = " << g.n << ", m = " << g.m() << ", q = " << cycle_rank(g) << '\n';
            out << "bridges: " << (bridge_set ? mask_edges(g, bridge_set) : "none") << '\n';
            out << "2-connected components: " << components.size() << '\n';
            for (EdgeMask comp : components) out << "  edges " << mask_edges(g, comp) << '\n';
            out << "cyclic part: n = " << cp.graph.n << ", m = " << cp.graph.m()
                << ", q = " << cycle_rank(cp.graph) << '\n';
            out << "odd-cycle-rank screen: " << (odd_q ? "non-orientable" : "inconclusive")
                << '\n';
            out << "loop-at-degree-3 screen: " << (loop3 ? "non-orientable" : "inconclusive")
                << '\n';
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_enumerate(const std::string& strips_path, bool census, bool json, std::ostream& out,
                  std::ostream& err) {
    try {
        if (census) {
            auto graphs = enumerate_cubic_q4();
            if (json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& g : graphs) {
                    nlohmann::json item;
                    item["n"] = g.n;
                    item["edges"] = nlohmann::json::array();
                    for (auto [u, v] : g.edges) item["edges"].push_back({u, v});
                    j.push_back(std::move(item));
                }
                out << j.dump(2) << '\n';
            } else {
                int index = 0;
                for (const auto& g : graphs) {
                    out << "# census graph " << index++ << '\n';
                    io::write_graph(out, g);
                }
            }
            return kExitOk;
        }
        // Strip enumeration over the rotation stored in a ribbon file, or a
        // sorted rotation when handed a plain graph file.
        RibbonStructure r;
        try {
            r = io::read_ribbon_file(strips_path);
        } catch (const io::ParseError&) {
            Multigraph g = io::read_graph_file(strips_path);
            r = make_ribbon(g, sorted_rotation(g), 0);
        }
        auto strips = enumerate_strips(r.graph, r.rotation);
        if (json) {
            nlohmann::json j = nlohmann::json::array();
            for (EdgeMask t : strips) j.push_back(io::mask_to_bitstring(t, r.graph.m()));
            out << j.dump(2) << '\n';
        } else {
            for (EdgeMask t : strips) out << io::mask_to_bitstring(t, r.graph.m()) << '\n';
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_classify(const std::string& graph_path, const std::string& generators,
                 const std::string& catalog_name, std::ostream& out, std::ostream& err) {
    try {
        GeneratorSet gens = GeneratorSet::parse(generators);
        Multigraph g;
        RotationSystem rot;
        std::string name;
        if (!catalog_name.empty()) {
            const auto& entry = catalog_entry(catalog_name);
            g = entry.graph;
            rot = entry.rotation;
            name = entry.name;
        } else {
            g = io::read_graph_file(graph_path);
            rot = sorted_rotation(g);
            name = std::filesystem::path(graph_path).stem().string();
        }
        auto report = classify(g, rot, gens, name);
        out << io::classification_to_json(report).dump(2) << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_realizable(const std::string& graph_path, bool criteria_only,
                   const std::string& known_bad_path, const std::string& record_bad_path,
                   bool json, std::ostream& out, std::ostream& err) {
    try {
        Multigraph g = io::read_graph_file(graph_path);
        if (!g.is_connected()) return fail_usage(err, "graph must be connected");
        KnownBadCatalog known_bad = KnownBadCatalog::seeded();
        if (!known_bad_path.empty()) {
            std::ifstream in(known_bad_path);
            if (!in) return fail_usage(err, "cannot open " + known_bad_path);
            for (const auto& bad : io::read_known_bad(in).graphs) known_bad.add(bad);
        }
        DecideOptions opts;
        opts.criteria_only = criteria_only;
        auto report = decide_orientably_realizable(g, known_bad, opts);
        if (report.verdict == Verdict::No && report.criterion == "oracle") {
            known_bad.add(cyclic_part(g).graph);
            if (!record_bad_path.empty()) {
                std::ofstream bad_out(record_bad_path);
                io::write_known_bad(bad_out, known_bad);
            }
        }
        if (json) {
            out << io::realizability_to_json(report).dump(2) << '\n';
        } else {
            const char* verdict = report.verdict == Verdict::Yes   ? "YES"
                                  : report.verdict == Verdict::No ? "NO"
                                                                  : "UNKNOWN";
            out << verdict << " (" << report.criterion << ")\n";
            if (report.witness) {
                out << "witness:\n";
                io::write_ribbon(out, *report.witness);
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_catalog(const std::string& out_dir, const std::string& name, std::ostream& out,
                std::ostream& err) {
    try {
        if (!name.empty()) {
            const auto& entry = catalog_entry(name);
            io::write_ribbon(out, make_ribbon(entry.graph, entry.rotation, 0));
            return kExitOk;
        }
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            for (const auto& entry : catalog()) {
                std::ofstream file(std::filesystem::path(out_dir) / (entry.name + ".ribbon"));
                io::write_ribbon(file, make_ribbon(entry.graph, entry.rotation, 0));
            }
            return kExitOk;
        }
        for (const auto& entry : catalog()) {
            out << entry.name << ": n = " << entry.graph.n << ", m = " << entry.graph.m()
                << ", tags =";
            for (const auto& tag : entry.tags) out << ' ' << tag;
            out << '\n';
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int cmd_verify_paper(unsigned long long seed, std::ostream& out, std::ostream& err) {
    try {
        VerifyOptions opts;
        opts.seed = seed;
        opts.progress = &err;
        auto rows = run_verification(opts);
        print_rows(out, rows);
        return all_pass(rows) ? kExitOk : kExitVerifyFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_export(const std::string& ribbon_path, const std::string& format, std::ostream& out,
               std::ostream& err) {
    try {
        RibbonStructure r = io::read_ribbon_file(ribbon_path);
        if (format == "dot") {
            out << io::to_dot(r);
        } else if (format == "json") {
            out << io::ribbon_to_json(r).dump(2) << '\n';
        } else {
            return fail_usage(err, "unknown format: " + format);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_usage(err, e.what());
    }
}

int run(int argc, char** argv) {
    CLI::App app{"cut locus structures on graphs"};
    app.require_subcommand(1);

    std::string graph_path, strips_path, ribbon_path, generators = "complement,flips,auto";
    std::string catalog_name, out_dir, known_bad_path, record_bad_path, format = "dot";
    bool json = false, criteria_only = false, census = false;
    unsigned long long seed = 0;

    auto* analyze = app.add_subcommand("analyze", "structural report for a graph file");
    analyze->add_option("graph", graph_path, "graph file")->required();
    analyze->add_flag("--json", json, "JSON output");

    auto* enumerate = app.add_subcommand("enumerate", "census or strip enumeration");
    enumerate->add_flag("--census", census, "list the cubic rank-4 census");
    enumerate->add_option("--strips", strips_path, "ribbon or graph file to scan");
    enumerate->add_flag("--json", json, "JSON output");

    auto* classify_cmd = app.add_subcommand("classify", "orientable CL-structure classes");
    classify_cmd->add_option("graph", graph_path, "graph file");
    classify_cmd->add_option("--catalog", catalog_name, "classify a catalog entry");
    classify_cmd->add_option("--generators", generators,
                             "comma list from complement,flips,auto");

    auto* realizable = app.add_subcommand("realizable", "orientable realizability");
    realizable->add_option("graph", graph_path, "graph file")->required();
    realizable->add_flag("--criteria-only", criteria_only, "skip the exhaustive oracle");
    realizable->add_option("--known-bad", known_bad_path, "extra known-bad catalog file");
    realizable->add_option("--record-bad", record_bad_path, "write enriched catalog here");
    realizable->add_flag("--json", json, "JSON output");

    auto* catalog_cmd = app.add_subcommand("catalog", "reference graphs and rotations");
    catalog_cmd->add_option("--out", out_dir, "write ribbon files to this directory");
    catalog_cmd->add_option("--name", catalog_name, "print one entry as a ribbon file");

    auto* verify = app.add_subcommand("verify-paper", "run the verification table");
    verify->add_option("--seed", seed, "seed for randomized rows");

    auto* export_cmd = app.add_subcommand("export", "convert a ribbon file");
    export_cmd->add_option("ribbon", ribbon_path, "ribbon file")->required();
    export_cmd->add_option("--format", format, "dot or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (analyze->parsed()) return cmd_analyze(graph_path, json, std::cout, std::cerr);
    if (enumerate->parsed()) {
        if (!census && strips_path.empty()) census = true;
        return cmd_enumerate(strips_path, census, json, std::cout, std::cerr);
    }
    if (classify_cmd->parsed()) {
        if (graph_path.empty() && catalog_name.empty())
            return fail_usage(std::cerr, "classify needs a graph file or --catalog name");
        return cmd_classify(graph_path, generators, catalog_name, std::cout, std::cerr);
    }
    if (realizable->parsed())
        return cmd_realizable(graph_path, criteria_only, known_bad_path, record_bad_path, json,
                              std::cout, std::cerr);
    if (catalog_cmd->parsed()) return cmd_catalog(out_dir, catalog_name, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify_paper(seed, std::cout, std::cerr);
    if (export_cmd->parsed()) return cmd_export(ribbon_path, format, std::cout, std::cerr);
    return fail_usage(std::cerr, "no subcommand");
}

} // namespace clstrata::cli
