#include "ricci/graph.hpp"

#include "ricci/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ricci {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 0) throw InvalidSpec("vertex count must be nonnegative");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n) throw VertexOutOfRange(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRange(v, n);
        if (u == v) throw SelfLoop(u);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n_; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            int w = *std::adjacent_find(nb.begin(), nb.end());
            throw DuplicateEdge(std::min(v, w), std::max(v, w));
        }
    }
    m_ = static_cast<int>(edges.size());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRange(v, n_);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_regular(int k) const {
    for (int v = 0; v < n_; ++v)
        if (static_cast<int>(adj_[v].size()) != k) return false;
    return true;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count()) throw VertexOutOfRange(source, g.vertex_count());
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

Girth girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;  // 0 = none found
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            // Once deeper than best/2 no shorter cycle through s can appear.
            if (best != 0 && 2 * dist[u] >= best) continue;
            for (int v : g.neighbors(u)) {
                if (dist[v] == kUnreachable) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u] && u != parent[v]) {
                    // Non-tree edge closes a cycle of length <= dist[u]+dist[v]+1.
                    int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best == 0 ? Girth::acyclic() : Girth::cycle(best);
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

}  // namespace ricci
