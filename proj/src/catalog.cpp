#include "ricci/catalog.hpp"

#include "ricci/errors.hpp"

#include <algorithm>

namespace ricci {

namespace {

Graph make_path(int k) {
    if (k < 2) throw InvalidSpec("path needs k >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, edges);
}

Graph make_cycle(int k) {
    if (k < 3) throw InvalidSpec("cycle needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, edges);
}

Graph make_generalized_petersen(int k, int t) {
    if (k < 3 || t < 1 || 2 * t >= k)
        throw InvalidSpec("generalized Petersen needs k >= 3 and 1 <= t < k/2");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);          // outer cycle u_i
        edges.emplace_back(k + i, k + (i + t) % k);  // inner star v_i ~ v_{i+t}
        edges.emplace_back(i, k + i);                // spokes
    }
    return Graph(2 * k, edges);
}

// Figure layout: inner pentagon a_0..a_4, spokes a_i ~ b_i, outer 10-cycle
// alternating b_i ~ c_i ~ b_{i+1}. Vertices: a_i = i, b_i = 5+i, c_i = 10+i.
Graph make_half_dodecahedral() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, 5 + i);
        edges.emplace_back(5 + i, 10 + i);
        edges.emplace_back(10 + i, 5 + (i + 1) % 5);
    }
    return Graph(15, edges);
}

// 12-cycle plus the six chords {1,7},{2,10},{3,8},{4,12},{5,9},{6,11}
// (1-indexed figure labels, stored 0-based).
Graph make_triplex() {
    std::vector<Edge> edges;
    for (int i = 0; i < 12; ++i) edges.emplace_back(i, (i + 1) % 12);
    const std::vector<Edge> chords{{1, 7}, {2, 10}, {3, 8}, {4, 12}, {5, 9}, {6, 11}};
    for (auto [u, v] : chords) edges.emplace_back(u - 1, v - 1);
    return Graph(12, edges);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        try {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw InvalidSpec("");
            return v;
        } catch (const std::exception&) {
            throw InvalidSpec("invalid family parameter in '" + name + "'");
        }
    };
    if (head == "path") return path(parse_int(args));
    if (head == "cycle") return cycle(parse_int(args));
    if (head == "petersen" && args.empty()) return petersen();
    if (head == "dodecahedral" && args.empty()) return dodecahedral();
    if (head == "half-dodecahedral" && args.empty()) return half_dodecahedral();
    if (head == "triplex" && args.empty()) return triplex();
    if (head == "gp") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw InvalidSpec("gp needs 'gp:K,T'");
        return generalized_petersen(parse_int(args.substr(0, comma)),
                                    parse_int(args.substr(comma + 1)));
    }
    throw InvalidSpec("unknown family: '" + name + "'");
}

std::string FamilySpec::name() const {
    switch (family) {
        case Family::kPath: return "path:" + std::to_string(k);
        case Family::kCycle: return "cycle:" + std::to_string(k);
        case Family::kPetersen: return "petersen";
        case Family::kDodecahedral: return "dodecahedral";
        case Family::kHalfDodecahedral: return "half-dodecahedral";
        case Family::kTriplex: return "triplex";
        case Family::kGeneralizedPetersen:
            return "gp:" + std::to_string(k) + "," + std::to_string(t);
    }
    throw InvalidSpec("unknown family enum");
}

Graph make_family(const FamilySpec& spec) {
    switch (spec.family) {
        case FamilySpec::Family::kPath: return make_path(spec.k);
        case FamilySpec::Family::kCycle: return make_cycle(spec.k);
        case FamilySpec::Family::kPetersen: return make_generalized_petersen(5, 2);
        case FamilySpec::Family::kDodecahedral: return make_generalized_petersen(10, 2);
        case FamilySpec::Family::kHalfDodecahedral: return make_half_dodecahedral();
        case FamilySpec::Family::kTriplex: return make_triplex();
        case FamilySpec::Family::kGeneralizedPetersen:
            return make_generalized_petersen(spec.k, spec.t);
    }
    throw InvalidSpec("unknown family enum");
}

std::vector<CatalogEntry> catalog_all(int max_cycle, int path_len) {
    if (max_cycle < 6) throw InvalidSpec("catalog needs max_cycle >= 6");
    if (path_len < 4) throw InvalidSpec("catalog needs path_len >= 4");

    std::vector<CatalogEntry> entries;
    for (int k = 6; k <= max_cycle; ++k) {
        Graph g = make_cycle(k);
        entries.push_back({FamilySpec::cycle(k).name(), g, g.edges()});
    }
    {
        Graph g = make_path(path_len);
        std::vector<Edge> interior;
        for (auto [u, v] : g.edges())
            if (g.degree(u) == 2 && g.degree(v) == 2) interior.emplace_back(u, v);
        entries.push_back({FamilySpec::path(path_len).name(), g, interior});
    }
    for (auto spec : {FamilySpec::petersen(), FamilySpec::dodecahedral(),
                      FamilySpec::half_dodecahedral(), FamilySpec::triplex()}) {
        Graph g = make_family(spec);
        entries.push_back({spec.name(), g, g.edges()});
    }
    return entries;
}

}  // namespace ricci
