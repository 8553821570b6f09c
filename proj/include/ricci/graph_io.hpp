#ifndef RICCI_GRAPH_IO_HPP
#define RICCI_GRAPH_IO_HPP

#include "ricci/graph.hpp"

#include <iosfwd>
#include <string>

namespace ricci {

// Edge-list text format:
//   optional '#' comment lines, then "n m", then m lines "u v" (0-based).
// Writers emit edges with u < v sorted lexicographically, newline-terminated.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

// One-line form "n m u1 v1 u2 v2 ..." used by census output files.
std::string edge_list_line(const Graph& g);
Graph parse_edge_list_line(const std::string& line);

}  // namespace ricci

#endif  // RICCI_GRAPH_IO_HPP
