#include "ricci/pentagon.hpp"

#include "ricci/errors.hpp"
#include "ricci/transport.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ricci {

FiveCycle FiveCycle::canonical(std::array<int, 5> cycle_order) {
    FiveCycle best;
    best.vertices_ = {-1, -1, -1, -1, -1};
    bool first = true;
    for (int dir = 0; dir < 2; ++dir) {
        for (int shift = 0; shift < 5; ++shift) {
            std::array<int, 5> candidate{};
            for (int k = 0; k < 5; ++k) {
                int idx = dir == 0 ? (shift + k) % 5 : (shift - k + 10) % 5;
                candidate[k] = cycle_order[idx];
            }
            if (first || candidate < best.vertices_) {
                best.vertices_ = candidate;
                first = false;
            }
        }
    }
    return best;
}

bool FiveCycle::contains_vertex(int v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool FiveCycle::contains_edge(int u, int v) const {
    for (int k = 0; k < 5; ++k) {
        int a = vertices_[k], b = vertices_[(k + 1) % 5];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

std::pair<int, int> FiveCycle::neighbors_in_cycle(int v) const {
    for (int k = 0; k < 5; ++k)
        if (vertices_[k] == v) return {vertices_[(k + 4) % 5], vertices_[(k + 1) % 5]};
    throw NotAnEdge(v, -1);
}

std::vector<FiveCycle> five_cycles_through(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) throw NotAnEdge(x, y);
    std::set<FiveCycle> found;
    // A C5 through xy is x-y-p-q-r-x with p in adj(y), r in adj(x),
    // q a common neighbor of p and r, all five vertices distinct.
    for (int p : g.neighbors(y)) {
        if (p == x) continue;
        for (int r : g.neighbors(x)) {
            if (r == y || r == p) continue;
            for (int q : g.neighbors(p)) {
                if (q == x || q == y || q == r || q == p) continue;
                if (!g.has_edge(q, r)) continue;
                found.insert(FiveCycle::canonical({x, y, p, q, r}));
            }
        }
    }
    return {found.begin(), found.end()};
}

EdgeProfile edge_profile(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) throw NotAnEdge(x, y);
    if (g.degree(x) > 3) throw DegreeTooLarge(x, g.degree(x));
    if (g.degree(y) > 3) throw DegreeTooLarge(y, g.degree(y));

    EdgeProfile profile;
    profile.x = x;
    profile.y = y;
    int xi = 0;
    for (int v : g.neighbors(x))
        if (v != y) profile.x_neighbors[xi++] = v;  // sorted adjacency gives x_1 < x_2
    int yi = 0;
    for (int v : g.neighbors(y))
        if (v != x) profile.y_neighbors[yi++] = v;

    profile.cycles = five_cycles_through(g, x, y);
    profile.c5_count = static_cast<int>(profile.cycles.size());
    profile.irregular = profile.c5_count == 3;

    for (const auto& cycle : profile.cycles) {
        auto [xa, xb] = cycle.neighbors_in_cycle(x);
        int x_side = xa == y ? xb : xa;
        auto [ya, yb] = cycle.neighbors_in_cycle(y);
        int y_side = ya == x ? yb : ya;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                if (profile.x_neighbors[i - 1] == x_side && profile.y_neighbors[j - 1] == y_side) {
                    auto& slot = profile.slots[2 * (i - 1) + (j - 1)];
                    if (!slot) slot = cycle;  // girth >= 5 makes the slot unique
                }
    }
    profile.has_opposite_pair = (profile.slot(1, 1) && profile.slot(2, 2)) ||
                                (profile.slot(1, 2) && profile.slot(2, 1));
    return profile;
}

Lemma1Report verify_lemma1(const Graph& g) {
    Girth gr = girth(g);
    if (!gr.is_acyclic() && gr.value() < 5)
        throw GirthTooSmall("verify_lemma1 requires girth >= 5, got " + std::to_string(gr.value()));
    Lemma1Report report;
    for (auto [x, y] : g.edges()) {
        if (g.degree(x) != 3 || g.degree(y) != 3) continue;
        if (!lly_curvature(g, x, y).is_zero()) continue;
        if (!edge_profile(g, x, y).has_opposite_pair) {
            report.pass = false;
            report.violations.emplace_back(x, y);
        }
    }
    return report;
}

const char* to_string(EmbeddingResult::FailureReason reason) {
    switch (reason) {
        case EmbeddingResult::FailureReason::kNone: return "NONE";
        case EmbeddingResult::FailureReason::kNoStartingC5: return "NO_STARTING_C5";
        case EmbeddingResult::FailureReason::kMissingOpposite: return "MISSING_OPPOSITE";
        case EmbeddingResult::FailureReason::kEdgeOversaturated: return "EDGE_OVERSATURATED";
    }
    return "NONE";
}

namespace {

// The unique C5 through the 3-path a'-a-b-b' when girth >= 5; picks the
// canonically smallest middle vertex otherwise.
std::optional<FiveCycle> cycle_through_path(const Graph& g, int ap, int a, int b, int bp) {
    if (ap < 0 || bp < 0 || ap == bp) return std::nullopt;
    std::optional<FiveCycle> best;
    for (int q : g.neighbors(ap)) {
        if (q == a || q == b || q == ap || q == bp) continue;
        if (!g.has_edge(q, bp)) continue;
        FiveCycle c = FiveCycle::canonical({a, b, bp, q, ap});
        if (!best || c < *best) best = c;
    }
    return best;
}

}  // namespace

EmbeddingResult pentagon_embedding(const Graph& g, bool enforce_preconditions) {
    if (enforce_preconditions) {
        if (!is_connected(g)) throw PreconditionViolated("pentagon_embedding requires a connected graph");
        if (!g.is_regular(3)) throw PreconditionViolated("pentagon_embedding requires a 3-regular graph");
        Girth gr = girth(g);
        if (!gr.is_acyclic() && gr.value() < 5)
            throw PreconditionViolated("pentagon_embedding requires girth >= 5");
    }

    EmbeddingResult result;

    // Seed: lexicographically smallest canonical C5 of the whole graph.
    std::optional<FiveCycle> seed;
    for (auto [u, v] : g.edges())
        for (const auto& c : five_cycles_through(g, u, v))
            if (!seed || c < *seed) seed = c;
    if (!seed) {
        result.reason = EmbeddingResult::FailureReason::kNoStartingC5;
        return result;
    }

    std::set<FiveCycle> faces;
    std::map<Edge, int> face_count;
    std::map<Edge, FiveCycle> single_face;  // the unique face at a count-1 edge
    std::deque<Edge> boundary;

    auto normalize = [](int u, int v) { return Edge{std::min(u, v), std::max(u, v)}; };

    auto glue = [&](const FiveCycle& face) -> std::optional<Edge> {
        if (faces.count(face)) throw std::logic_error("pentagon gluing revisited an existing face");
        for (int k = 0; k < 5; ++k) {
            int u = face.vertices()[k], v = face.vertices()[(k + 1) % 5];
            if (face_count[normalize(u, v)] >= 2) return normalize(u, v);  // would oversaturate
        }
        faces.insert(face);
        for (int k = 0; k < 5; ++k) {
            int u = face.vertices()[k], v = face.vertices()[(k + 1) % 5];
            Edge e = normalize(u, v);
            int count = ++face_count[e];
            if (count == 1) {
                single_face[e] = face;
                boundary.push_back(e);
            } else {
                single_face.erase(e);
            }
        }
        return std::nullopt;
    };

    if (auto bad = glue(*seed)) {
        result.reason = EmbeddingResult::FailureReason::kEdgeOversaturated;
        result.witness = *bad;
        return result;
    }

    while (!boundary.empty()) {
        Edge e = boundary.front();
        boundary.pop_front();
        if (face_count[e] != 1) continue;  // already closed meanwhile

        auto [a, b] = e;
        const FiveCycle face = single_face.at(e);
        auto [a1, a2] = face.neighbors_in_cycle(a);
        int a_in_face = a1 == b ? a2 : a1;
        auto [b1, b2] = face.neighbors_in_cycle(b);
        int b_in_face = b1 == a ? b2 : b1;

        // Opposite slot: the third neighbors of a and b.
        int a_opposite = -1, b_opposite = -1;
        for (int w : g.neighbors(a))
            if (w != b && w != a_in_face) a_opposite = w;
        for (int w : g.neighbors(b))
            if (w != a && w != b_in_face) b_opposite = w;

        auto opposite = cycle_through_path(g, a_opposite, a, b, b_opposite);
        if (!opposite) {
            result.reason = EmbeddingResult::FailureReason::kMissingOpposite;
            result.witness = e;
            return result;
        }
        if (auto bad = glue(*opposite)) {
            result.reason = EmbeddingResult::FailureReason::kEdgeOversaturated;
            result.witness = *bad;
            return result;
        }
    }

    for (auto [u, v] : g.edges()) {
        auto it = face_count.find(normalize(u, v));
        if (it == face_count.end() || it->second != 2)
            throw std::logic_error("pentagon gluing terminated with an uncovered edge");
    }

    result.closed = true;
    result.faces.assign(faces.begin(), faces.end());
    result.euler_characteristic =
        g.vertex_count() - g.edge_count() + static_cast<int>(result.faces.size());
    return result;
}

}  // namespace ricci
