#ifndef RICCI_CATALOG_HPP
#define RICCI_CATALOG_HPP

#include "ricci/graph.hpp"

#include <string>
#include <vector>

namespace ricci {

// Specification of a graph family from the flat-graph classification.
struct FamilySpec {
    enum class Family {
        kPath,
        kCycle,
        kPetersen,
        kDodecahedral,
        kHalfDodecahedral,
        kTriplex,
        kGeneralizedPetersen,
    };

    Family family = Family::kPath;
    int k = 0;  // PATH/CYCLE length or GP outer cycle size
    int t = 0;  // GP inner step

    static FamilySpec path(int k) { return {Family::kPath, k, 0}; }
    static FamilySpec cycle(int k) { return {Family::kCycle, k, 0}; }
    static FamilySpec petersen() { return {Family::kPetersen, 0, 0}; }
    static FamilySpec dodecahedral() { return {Family::kDodecahedral, 0, 0}; }
    static FamilySpec half_dodecahedral() { return {Family::kHalfDodecahedral, 0, 0}; }
    static FamilySpec triplex() { return {Family::kTriplex, 0, 0}; }
    static FamilySpec generalized_petersen(int k, int t) {
        return {Family::kGeneralizedPetersen, k, t};
    }

    // Accepts "path:K", "cycle:K", "petersen", "dodecahedral",
    // "half-dodecahedral", "triplex", "gp:K,T".
    static FamilySpec parse(const std::string& name);
    std::string name() const;
};

Graph make_family(const FamilySpec& spec);

struct CatalogEntry {
    std::string name;
    Graph graph;
    std::vector<Edge> checked_edges;  // edges whose curvature must vanish
};

// Cycles C6..max_cycle, a finite path standing in for the infinite path
// (interior edges only), and the four named girth-5 graphs.
std::vector<CatalogEntry> catalog_all(int max_cycle, int path_len);

}  // namespace ricci

#endif  // RICCI_CATALOG_HPP
