#ifndef RICCI_CANONICAL_HPP
#define RICCI_CANONICAL_HPP

#include "ricci/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ricci {

// Total-order key identifying an isomorphism class: equal keys iff the
// graphs are isomorphic, invariant under relabeling.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes < b.bytes; }

    std::string hex() const;
};

// Degree/neighborhood partition refinement followed by exhaustive
// minimization over permutations consistent with the refined cells.
CanonicalForm canonical_form(const Graph& g);

// The graph relabeled by the permutation that realizes the canonical form.
Graph canonical_relabel(const Graph& g);

// Both at once, running the canonical search a single time.
std::pair<CanonicalForm, Graph> canonicalize_graph(const Graph& g);

}  // namespace ricci

#endif  // RICCI_CANONICAL_HPP
