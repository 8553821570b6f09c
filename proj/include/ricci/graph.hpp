#ifndef RICCI_GRAPH_HPP
#define RICCI_GRAPH_HPP

#include <utility>
#include <vector>

namespace ricci {

using Edge = std::pair<int, int>;

inline constexpr int kUnreachable = -1;

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
public:
    Graph() = default;
    // Validates: no self-loops, no duplicate edges, endpoints in range.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    // All edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;
    bool is_regular(int k) const;
    int max_degree() const;
    int min_degree() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Girth of a graph: shortest simple cycle length (>= 3), or ACYCLIC for forests.
class Girth {
public:
    static Girth acyclic() { return Girth(0); }
    static Girth cycle(int length) { return Girth(length); }
    bool is_acyclic() const { return value_ == 0; }
    int value() const { return value_; }  // 0 means acyclic
    bool operator==(const Girth&) const = default;

private:
    explicit Girth(int v) : value_(v) {}
    int value_;
};

// Exact hop distances from source; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, int source);

// Shortest simple cycle via BFS from every vertex with cross-edge detection.
Girth girth(const Graph& g);

// True iff the graph has one connected component (n <= 1 counts as connected).
bool is_connected(const Graph& g);

}  // namespace ricci

#endif  // RICCI_GRAPH_HPP
