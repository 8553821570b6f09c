#ifndef RICCI_PENTAGON_HPP
#define RICCI_PENTAGON_HPP

#include "ricci/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ricci {

// A simple 5-cycle stored in canonical rotation: the lexicographically
// smallest of the ten rotations/reflections of the vertex sequence.
class FiveCycle {
public:
    FiveCycle() = default;
    // `cycle_order` lists the vertices in cyclic order (consecutive adjacent).
    static FiveCycle canonical(std::array<int, 5> cycle_order);

    const std::array<int, 5>& vertices() const { return vertices_; }
    bool contains_vertex(int v) const;
    bool contains_edge(int u, int v) const;
    // The two cyclic neighbors of v inside the cycle.
    std::pair<int, int> neighbors_in_cycle(int v) const;

    friend bool operator==(const FiveCycle& a, const FiveCycle& b) { return a.vertices_ == b.vertices_; }
    friend bool operator<(const FiveCycle& a, const FiveCycle& b) { return a.vertices_ < b.vertices_; }

private:
    std::array<int, 5> vertices_{-1, -1, -1, -1, -1};
};

// All simple 5-cycles containing edge xy, canonical and sorted.
std::vector<FiveCycle> five_cycles_through(const Graph& g, int x, int y);

// Per-edge record: 5-cycle slots over the four 3-paths x_i x y y_j,
// opposite-pair status, and the irregular flag (exactly three 5-cycles).
struct EdgeProfile {
    int x = -1, y = -1;
    // Neighbors of x other than y in ascending id (x_1 < x_2); -1 when absent.
    std::array<int, 2> x_neighbors{-1, -1};
    std::array<int, 2> y_neighbors{-1, -1};
    // slot(i,j): the 5-cycle through x_i x y y_j, i,j in {1,2}.
    std::array<std::optional<FiveCycle>, 4> slots;
    std::vector<FiveCycle> cycles;  // all 5-cycles through xy
    int c5_count = 0;
    bool irregular = false;
    bool has_opposite_pair = false;

    const std::optional<FiveCycle>& slot(int i, int j) const { return slots[2 * (i - 1) + (j - 1)]; }
};

// Requires both endpoint degrees <= 3 (slot model undefined above that).
EdgeProfile edge_profile(const Graph& g, int x, int y);

// Checks, for every edge with d_x = d_y = 3 and curvature zero, that an
// opposite pair of 5-cycles shares the edge. Requires girth >= 5.
struct Lemma1Report {
    bool pass = true;
    std::vector<Edge> violations;
};
Lemma1Report verify_lemma1(const Graph& g);

// Outcome of recursively gluing pentagons: either a closed surface whose
// faces are all pentagons, or the first obstruction encountered.
struct EmbeddingResult {
    enum class FailureReason { kNone, kNoStartingC5, kMissingOpposite, kEdgeOversaturated };

    bool closed = false;
    std::vector<FiveCycle> faces;      // on success, sorted canonically
    int euler_characteristic = 0;      // n - m + |faces|
    Edge witness{-1, -1};              // on failure
    FailureReason reason = FailureReason::kNone;
};

const char* to_string(EmbeddingResult::FailureReason reason);

// Seeds with the lexicographically smallest 5-cycle and glues the opposite
// pentagon across boundary edges in FIFO order. Preconditions (girth >= 5,
// connected, 3-regular) can be relaxed for experimentation.
EmbeddingResult pentagon_embedding(const Graph& g, bool enforce_preconditions = true);

}  // namespace ricci

#endif  // RICCI_PENTAGON_HPP
