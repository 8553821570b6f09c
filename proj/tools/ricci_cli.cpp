// Command-line front end: graph generation, exact edge curvature, catalog
// verification, pentagon structure reports, and the classification census.
//
// Exit codes: 0 success/verified, 1 meaningful negative result (non-flat
// edge, classification mismatch), 2 usage or input errors.

#include "ricci/catalog.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph_io.hpp"
#include "ricci/pentagon.hpp"
#include "ricci/search.hpp"
#include "ricci/transport.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace ricci;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << text;
}

std::string dump_json(const json& doc) { return doc.dump() + "\n"; }

json edge_json(int u, int v) { return json::array({u, v}); }

json cycle_json(const FiveCycle& c) {
    json arr = json::array();
    for (int v : c.vertices()) arr.push_back(v);
    return arr;
}

int run_gen(const std::string& family, const std::string& out_path) {
    Graph g = make_family(FamilySpec::parse(family));
    emit(edge_list_string(g), out_path);
    return 0;
}

int run_curvature(const std::string& graph_path, const std::string& edge_arg,
                  const std::string& alpha_arg, const std::string& format) {
    Graph g = read_edge_list_file(graph_path);
    std::optional<Rational> alpha;
    if (!alpha_arg.empty()) {
        alpha = Rational::parse(alpha_arg);
        if (alpha->sign() < 0 || *alpha > Rational(1)) throw AlphaOutOfRange(alpha->str());
    }

    std::vector<Edge> targets;
    if (!edge_arg.empty()) {
        auto comma = edge_arg.find(',');
        if (comma == std::string::npos) throw ParseError("--edge expects 'U,V'");
        try {
            targets.emplace_back(std::stoi(edge_arg.substr(0, comma)),
                                 std::stoi(edge_arg.substr(comma + 1)));
        } catch (const std::exception&) {
            throw ParseError("--edge expects integers 'U,V'");
        }
    } else {
        targets = g.edges();
        if (targets.empty()) throw EmptyGraph();
    }

    std::vector<std::pair<Edge, Rational>> values;
    for (auto [u, v] : targets) {
        Rational k = alpha ? kappa_alpha(g, u, v, *alpha) : lly_curvature(g, u, v);
        values.push_back({{u, v}, k});
    }
    bool flat = true;
    std::pair<Edge, Rational> witness{{-1, -1}, Rational()};
    for (const auto& entry : values)
        if (!entry.second.is_zero()) {
            flat = false;
            witness = entry;
            break;
        }

    const char* value_key = alpha ? "kappa_alpha" : "kappa";
    if (format == "json") {
        json doc;
        if (alpha) doc["alpha"] = alpha->str();
        doc["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
        json edges = json::array();
        for (const auto& [e, k] : values)
            edges.push_back({{"edge", edge_json(e.first, e.second)}, {value_key, k.str()}});
        doc["edges"] = edges;
        doc["flat"] = flat;
        if (!flat)
            doc["witness"] = {{"edge", edge_json(witness.first.first, witness.first.second)},
                              {value_key, witness.second.str()}};
        std::cout << dump_json(doc);
    } else {
        std::cout << "u v " << value_key << "\n";
        for (const auto& [e, k] : values)
            std::cout << e.first << " " << e.second << " " << k.str() << "\n";
        std::cout << "flat " << (flat ? "true" : "false") << "\n";
        if (!flat)
            std::cout << "witness " << witness.first.first << " " << witness.first.second << " "
                      << witness.second.str() << "\n";
    }
    return flat ? 0 : 1;
}

int run_verify_catalog(int max_cycle, int path_length) {
    bool all_flat = true;
    std::cout << "family vertices edges checked flat\n";
    for (const auto& entry : catalog_all(max_cycle, path_length)) {
        bool flat = true;
        for (auto [u, v] : entry.checked_edges)
            if (!lly_curvature(entry.graph, u, v).is_zero()) {
                flat = false;
                break;
            }
        all_flat = all_flat && flat;
        std::cout << entry.name << " " << entry.graph.vertex_count() << " "
                  << entry.graph.edge_count() << " " << entry.checked_edges.size() << " "
                  << (flat ? "true" : "false") << "\n";
    }
    std::cout << "all flat: " << (all_flat ? "true" : "false") << "\n";
    return all_flat ? 0 : 1;
}

int run_structure(const std::string& graph_path, bool embed, const std::string& format) {
    Graph g = read_edge_list_file(graph_path);
    if (g.edge_count() == 0) throw EmptyGraph();

    Girth gr = girth(g);
    std::vector<EdgeProfile> profiles;
    for (auto [u, v] : g.edges()) profiles.push_back(edge_profile(g, u, v));

    std::vector<Edge> irregular;
    for (const auto& p : profiles)
        if (p.irregular) irregular.emplace_back(p.x, p.y);

    bool lemma1_applicable = gr.is_acyclic() || gr.value() >= 5;
    Lemma1Report lemma1;
    if (lemma1_applicable) lemma1 = verify_lemma1(g);

    std::optional<EmbeddingResult> embedding;
    if (embed) embedding = pentagon_embedding(g);

    if (format == "json") {
        json doc;
        doc["girth"] = gr.is_acyclic() ? json("acyclic") : json(gr.value());
        json edges = json::array();
        for (const auto& p : profiles) {
            json cycles = json::array();
            for (const auto& c : p.cycles) cycles.push_back(cycle_json(c));
            edges.push_back({{"edge", edge_json(p.x, p.y)},
                             {"c5_count", p.c5_count},
                             {"irregular", p.irregular},
                             {"opposite_pair", p.has_opposite_pair},
                             {"cycles", cycles}});
        }
        doc["edges"] = edges;
        json irr = json::array();
        for (auto [u, v] : irregular) irr.push_back(edge_json(u, v));
        doc["irregular_edges"] = irr;
        doc["irregular_count"] = irregular.size();
        if (lemma1_applicable) {
            json violations = json::array();
            for (auto [u, v] : lemma1.violations) violations.push_back(edge_json(u, v));
            doc["lemma1"] = {{"applicable", true}, {"pass", lemma1.pass}, {"violations", violations}};
        } else {
            doc["lemma1"] = {{"applicable", false}};
        }
        if (embedding) {
            if (embedding->closed) {
                json faces = json::array();
                for (const auto& f : embedding->faces) faces.push_back(cycle_json(f));
                doc["embedding"] = {{"closed", true},
                                    {"faces", faces},
                                    {"euler_characteristic", embedding->euler_characteristic}};
            } else {
                doc["embedding"] = {{"closed", false},
                                    {"reason", to_string(embedding->reason)},
                                    {"witness", edge_json(embedding->witness.first,
                                                          embedding->witness.second)}};
            }
        }
        std::cout << dump_json(doc);
    } else {
        std::cout << "u v c5_count irregular opposite_pair\n";
        for (const auto& p : profiles)
            std::cout << p.x << " " << p.y << " " << p.c5_count << " "
                      << (p.irregular ? "yes" : "no") << " "
                      << (p.has_opposite_pair ? "yes" : "no") << "\n";
        std::cout << "girth " << (gr.is_acyclic() ? std::string("acyclic") : std::to_string(gr.value()))
                  << "\n";
        std::cout << "irregular edges " << irregular.size() << "\n";
        if (lemma1_applicable)
            std::cout << "lemma1 " << (lemma1.pass ? "pass" : "fail") << "\n";
        else
            std::cout << "lemma1 not-applicable\n";
        if (embedding) {
            if (embedding->closed)
                std::cout << "embedding closed faces=" << embedding->faces.size()
                          << " euler_characteristic=" << embedding->euler_characteristic << "\n";
            else
                std::cout << "embedding failed reason=" << to_string(embedding->reason)
                          << " witness=" << embedding->witness.first << ","
                          << embedding->witness.second << "\n";
        }
    }
    return lemma1_applicable && !lemma1.pass ? 1 : 0;
}

int run_search(int max_n, int min_degree, int max_degree, int workers,
               const std::string& out_path, const std::string& format) {
    SearchOptions options;
    options.min_degree = min_degree;
    options.max_degree = max_degree;
    options.workers = workers;
    auto records = classify_ricci_flat(max_n, options);

    auto expected = expected_ricci_flat(max_n, min_degree, max_degree);
    std::vector<std::pair<int, CanonicalForm>> found_keys, expected_keys;
    for (const auto& r : records)
        for (const auto& e : r.ricci_flat) found_keys.emplace_back(r.n, e.form);
    for (const auto& e : expected) expected_keys.emplace_back(e.n, e.form);
    bool match = found_keys == expected_keys;

    if (!out_path.empty()) {
        std::string census;
        for (const auto& r : records) {
            census += "# n=" + std::to_string(r.n) +
                      " enumerated=" + std::to_string(r.enumerated_count) + "\n";
            for (const auto& e : r.ricci_flat) census += edge_list_line(e.graph) + "\n";
        }
        emit(census, out_path);
    }

    if (format == "json") {
        json doc;
        doc["max_n"] = max_n;
        doc["min_degree"] = min_degree;
        doc["max_degree"] = max_degree;
        doc["expected_match"] = match;
        json recs = json::array();
        for (const auto& r : records) {
            json flats = json::array();
            for (const auto& e : r.ricci_flat)
                flats.push_back({{"family", e.family}, {"edge_list", edge_list_line(e.graph)}});
            recs.push_back({{"n", r.n}, {"enumerated", r.enumerated_count}, {"ricci_flat", flats}});
        }
        doc["records"] = recs;
        std::cout << dump_json(doc);
    } else {
        for (const auto& r : records) {
            std::cout << "n=" << r.n << " enumerated=" << r.enumerated_count
                      << " ricci-flat=" << r.ricci_flat.size() << "\n";
            for (const auto& e : r.ricci_flat)
                std::cout << "  " << e.family << ": " << edge_list_line(e.graph) << "\n";
        }
        std::cout << "expectation: " << (match ? "match" : "MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lin-Lu-Yau curvature and flat-graph classification tools"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a catalog family graph");
    std::string gen_family, gen_out;
    gen->add_option("--family", gen_family,
                    "path:K, cycle:K, petersen, dodecahedral, half-dodecahedral, triplex, gp:K,T")
        ->required();
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    auto* curvature = app.add_subcommand("curvature", "Exact edge curvature of a graph");
    std::string cur_graph, cur_edge, cur_alpha, cur_format = "table";
    curvature->add_option("--graph", cur_graph, "Edge-list file")->required();
    curvature->add_option("--edge", cur_edge, "Single edge 'U,V'");
    curvature->add_option("--alpha", cur_alpha,
                          "Evaluate kappa_alpha at this P/Q instead of the LLY limit");
    curvature->add_option("--format", cur_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* verify = app.add_subcommand("verify-catalog", "Check every catalog family is flat");
    int max_cycle = 20, path_length = 50;
    verify->add_option("--max-cycle", max_cycle, "Largest cycle length (default 20)");
    verify->add_option("--path-length", path_length,
                       "Finite stand-in for the infinite path (default 50)");

    auto* structure = app.add_subcommand("structure", "5-cycle structure of each edge");
    std::string str_graph, str_format = "table";
    bool str_embed = false;
    structure->add_option("--graph", str_graph, "Edge-list file")->required();
    structure->add_flag("--embed", str_embed, "Attempt the pentagon surface gluing");
    structure->add_option("--format", str_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* search = app.add_subcommand("search", "Census of small girth-5 graphs vs the classification");
    int search_max_n = 0, search_min_degree = 2, search_max_degree = 3, search_workers = 0;
    std::string search_out, search_format = "table";
    search->add_option("--max-n", search_max_n, "Largest vertex count")->required();
    search->add_option("--min-degree", search_min_degree, "Minimum degree (default 2)");
    search->add_option("--max-degree", search_max_degree, "Maximum degree (default 3)");
    search->add_option("--workers", search_workers, "Worker threads (default RICCI_WORKERS or 1)");
    search->add_option("--out", search_out, "Census output file");
    search->add_option("--format", search_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_family, gen_out);
        if (curvature->parsed()) return run_curvature(cur_graph, cur_edge, cur_alpha, cur_format);
        if (verify->parsed()) return run_verify_catalog(max_cycle, path_length);
        if (structure->parsed()) return run_structure(str_graph, str_embed, str_format);
        if (search->parsed()) {
            if (search_workers <= 0) {
                const char* env = std::getenv("RICCI_WORKERS");
                search_workers = env ? std::max(1, std::atoi(env)) : 1;
            }
            return run_search(search_max_n, search_min_degree, search_max_degree, search_workers,
                              search_out, search_format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
