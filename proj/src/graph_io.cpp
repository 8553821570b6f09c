#include "ricci/graph_io.hpp"

#include "ricci/errors.hpp"

#include <fstream>
#include <sstream>

namespace ricci {

namespace {

int parse_int(const std::string& token, const std::string& context) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected integer in " + context + ", got '" + token + "'");
    }
    if (pos != token.size())
        throw ParseError("trailing characters after integer in " + context + ": '" + token + "'");
    return value;
}

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing header line 'n m'");
    std::istringstream header(line);
    std::string tok_n, tok_m, extra;
    if (!(header >> tok_n >> tok_m)) throw ParseError("header must be 'n m', got '" + line + "'");
    if (header >> extra) throw ParseError("header must be 'n m', got '" + line + "'");
    int n = parse_int(tok_n, "header");
    int m = parse_int(tok_m, "header");
    if (n < 0 || m < 0) throw ParseError("header counts must be nonnegative");

    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(line);
        std::string tok_u, tok_v;
        if (!(es >> tok_u >> tok_v)) throw ParseError("edge line must be 'u v', got '" + line + "'");
        if (es >> extra) throw ParseError("edge line must be 'u v', got '" + line + "'");
        edges.emplace_back(parse_int(tok_u, "edge line"), parse_int(tok_v, "edge line"));
    }
    while (next_content_line(in, line)) {
        if (!line.empty())
            throw ParseError("unexpected content after " + std::to_string(m) + " edges: '" + line + "'");
    }
    return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

std::string edge_list_line(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count();
    for (auto [u, v] : g.edges()) out << ' ' << u << ' ' << v;
    return out.str();
}

Graph parse_edge_list_line(const std::string& line) {
    std::istringstream in(line);
    std::string tok;
    std::vector<int> values;
    while (in >> tok) values.push_back(parse_int(tok, "census line"));
    if (values.size() < 2) throw ParseError("census line must start with 'n m'");
    int n = values[0], m = values[1];
    if (static_cast<int>(values.size()) != 2 + 2 * m)
        throw ParseError("census line has wrong number of endpoints");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) edges.emplace_back(values[2 + 2 * i], values[3 + 2 * i]);
    return Graph(n, edges);
}

}  // namespace ricci
