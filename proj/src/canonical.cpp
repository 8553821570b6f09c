#include "ricci/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace ricci {

namespace {

struct BitAdjacency {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;  // n rows of `words` words

    explicit BitAdjacency(const Graph& g)
        : n(g.vertex_count()), words((g.vertex_count() + 63) / 64), bits(static_cast<size_t>(n) * words) {
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) bits[static_cast<size_t>(u) * words + v / 64] |= 1ULL << (v % 64);
    }

    bool get(int i, int j) const {
        return (bits[static_cast<size_t>(i) * words + j / 64] >> (j % 64)) & 1ULL;
    }
};

// Equitable refinement: recolor by (color, sorted neighbor colors) until
// stable. Colors are ranks of label-independent signatures, so the
// partition itself is relabeling-invariant.
std::vector<int> refine(const BitAdjacency& g, std::vector<int> colors) {
    const int n = g.n;
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.clear();
            s.push_back(colors[v]);
            for (int u = 0; u < n; ++u)
                if (g.get(v, u)) s.push_back(colors[u]);
            std::sort(s.begin() + 1, s.end());
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int rank = 0;
        for (int idx = 0; idx < n; ++idx) {
            if (idx > 0 && sig[order[idx]] != sig[order[idx - 1]]) ++rank;
            next[order[idx]] = rank;
        }
        if (next == colors) return colors;
        colors = std::move(next);
    }
}

struct CanonicalSearch {
    const BitAdjacency& g;
    std::vector<std::uint8_t> best_bytes;
    std::vector<int> best_labels;  // vertex -> canonical position
    bool have_best = false;

    explicit CanonicalSearch(const BitAdjacency& graph) : g(graph) {}

    std::vector<std::uint8_t> encode(const std::vector<int>& labels) const {
        const int n = g.n;
        std::vector<int> inverse(n);
        for (int v = 0; v < n; ++v) inverse[labels[v]] = v;
        std::vector<std::uint8_t> bytes;
        bytes.reserve(4 + (static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8);
        for (int shift = 24; shift >= 0; shift -= 8)
            bytes.push_back(static_cast<std::uint8_t>((static_cast<unsigned>(n) >> shift) & 0xff));
        std::uint8_t acc = 0;
        int filled = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                acc = static_cast<std::uint8_t>((acc << 1) | (g.get(inverse[i], inverse[j]) ? 1 : 0));
                if (++filled == 8) {
                    bytes.push_back(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
        return bytes;
    }

    void run(std::vector<int> colors) {
        colors = refine(g, std::move(colors));
        // First non-singleton cell in color order.
        const int n = g.n;
        std::vector<int> cell_size(n, 0);
        for (int c : colors) ++cell_size[c];
        int target = -1;
        for (int v = 0; v < n; ++v)
            if (cell_size[colors[v]] > 1 && (target == -1 || colors[v] < colors[target])) target = v;
        if (target == -1) {
            auto bytes = encode(colors);
            if (!have_best || bytes < best_bytes) {
                best_bytes = std::move(bytes);
                best_labels = colors;
                have_best = true;
            }
            return;
        }
        int cell = colors[target];
        for (int v = 0; v < n; ++v) {
            if (colors[v] != cell) continue;
            std::vector<int> split(n);
            for (int u = 0; u < n; ++u) split[u] = 2 * colors[u] + (u == v ? 0 : 1);
            run(std::move(split));
        }
    }
};

CanonicalSearch canonicalize(const Graph& g) {
    BitAdjacency adj(g);
    CanonicalSearch search(adj);
    if (g.vertex_count() == 0) {
        search.best_bytes = {0, 0, 0, 0};
        search.have_best = true;
        return search;
    }
    std::vector<int> degrees(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
    search.run(std::move(degrees));
    return search;
}

}  // namespace

std::string CanonicalForm::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{canonicalize(g).best_bytes};
}

namespace {

Graph relabeled(const Graph& g, const std::vector<int>& labels) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(labels[u], labels[v]);
    return Graph(g.vertex_count(), edges);
}

}  // namespace

Graph canonical_relabel(const Graph& g) {
    if (g.vertex_count() == 0) return g;
    return relabeled(g, canonicalize(g).best_labels);
}

std::pair<CanonicalForm, Graph> canonicalize_graph(const Graph& g) {
    auto search = canonicalize(g);
    if (g.vertex_count() == 0) return {CanonicalForm{search.best_bytes}, g};
    return {CanonicalForm{search.best_bytes}, relabeled(g, search.best_labels)};
}

}  // namespace ricci
