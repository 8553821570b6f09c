#ifndef RICCI_SEARCH_HPP
#define RICCI_SEARCH_HPP

#include "ricci/canonical.hpp"
#include "ricci/graph.hpp"

#include <string>
#include <vector>

namespace ricci {

struct SearchOptions {
    int min_degree = 2;
    int max_degree = 3;
    int min_girth = 5;
    int workers = 1;
    int vertex_limit = 16;  // configured enumeration limit
};

// Exactly one representative per isomorphism class of connected graphs on n
// vertices with degrees in [min_degree, max_degree] and girth >= min_girth.
// Output graphs carry canonical labels and are sorted by canonical form.
std::vector<Graph> enumerate_graphs(int n, const SearchOptions& options);

struct RicciFlatEntry {
    CanonicalForm form;
    Graph graph;         // canonical labeling
    std::string family;  // catalog family name, or "UNKNOWN"
};

struct CensusRecord {
    int n = 0;
    int min_degree = 0;
    int max_degree = 0;
    int min_girth = 0;
    long long enumerated_count = 0;
    std::vector<RicciFlatEntry> ricci_flat;
};

// Enumerates each n <= max_n, rejects graphs that fail the opposite-pair
// necessary condition on any 3-3 edge before doing transport work, then
// keeps exactly the graphs with vanishing curvature on every edge.
std::vector<CensusRecord> classify_ricci_flat(int max_n, const SearchOptions& options);

// The catalog family with this canonical form, or "UNKNOWN".
std::string match_catalog_family(int n, const CanonicalForm& form);

struct ExpectedFlat {
    int n = 0;
    std::string family;
    CanonicalForm form;
};

// Finite slice of the classification theorem expected in a census with the
// given degree bounds: cycles C6.., Petersen, half-dodecahedral, Triplex,
// dodecahedral, whichever fit.
std::vector<ExpectedFlat> expected_ricci_flat(int max_n, int min_degree, int max_degree);

}  // namespace ricci

#endif  // RICCI_SEARCH_HPP
