#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "ricci/catalog.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "ricci/graph_io.hpp"
#include "ricci/rational.hpp"

#include <random>
#include <sstream>

using namespace ricci;
using namespace ricci::testing;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).num() == -1);
    CHECK(Rational(-2, 4).den() == 2);
    CHECK(Rational(BigInt(6), BigInt(-4)) == Rational(-3, 2));
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(3, 7) - Rational(3, 7) == Rational());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7).str() == "7/1");
    CHECK(Rational(-1, 2).str() == "-1/2");

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int i = 0; i < 200; ++i) {
        int p = d(rng), q = d(rng);
        if (q == 0) continue;
        Rational r(p, q);
        CHECK(r.den() > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.num()), r.den()) == 1);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("rational parsing errors") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-5/10") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), ParseError);
}

TEST_CASE("graph construction and validation") {
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(path.vertex_count() == 3);
    CHECK(path.edge_count() == 2);
    CHECK(path.degree(1) == 2);
    CHECK(path.neighbors(1) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), SelfLoop);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DuplicateEdge);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), VertexOutOfRange);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), VertexOutOfRange);

    // Edge input order is irrelevant.
    Graph a(4, {{2, 3}, {0, 1}, {1, 2}});
    Graph b(4, {{0, 1}, {1, 2}, {3, 2}});
    CHECK(a == b);
    CHECK(a.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("bfs distances") {
    Graph c6 = make_family(FamilySpec::cycle(6));
    auto dist = bfs_distances(c6, 0);
    CHECK(dist[3] == 3);
    CHECK(dist[0] == 0);

    Graph petersen = make_family(FamilySpec::petersen());
    for (int s = 0; s < 10; ++s) {
        auto d = bfs_distances(petersen, s);
        for (int v = 0; v < 10; ++v) CHECK(d[v] <= 2);
    }

    Graph disjoint(4, {{0, 1}, {2, 3}});
    auto d2 = bfs_distances(disjoint, 0);
    CHECK(d2[2] == kUnreachable);
    CHECK(d2[3] == kUnreachable);
    CHECK(d2[1] == 1);

    CHECK_THROWS_AS(bfs_distances(c6, 6), VertexOutOfRange);
}

TEST_CASE("bfs distances agree with Floyd-Warshall on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_girth5_graph(rng, 10, 8);
        auto oracle = oracle_all_pairs(g);
        for (int s = 0; s < g.vertex_count(); ++s) {
            auto d = bfs_distances(g, s);
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(d[v] == oracle[s][v]);
        }
        // Symmetry and triangle inequality.
        for (int a = 0; a < g.vertex_count(); ++a)
            for (int b = 0; b < g.vertex_count(); ++b) {
                CHECK(oracle[a][b] == oracle[b][a]);
                for (int c = 0; c < g.vertex_count(); ++c)
                    if (oracle[a][b] != kUnreachable && oracle[b][c] != kUnreachable &&
                        oracle[a][c] != kUnreachable)
                        CHECK(oracle[a][c] <= oracle[a][b] + oracle[b][c]);
            }
    }
}

TEST_CASE("girth") {
    CHECK(girth(make_family(FamilySpec::cycle(6))) == Girth::cycle(6));
    CHECK(girth(make_family(FamilySpec::petersen())) == Girth::cycle(5));
    CHECK(girth(make_family(FamilySpec::triplex())) == Girth::cycle(5));
    CHECK(girth(make_family(FamilySpec::path(10))).is_acyclic());
    CHECK(girth(Graph(1, {})).is_acyclic());
    CHECK(girth(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == Girth::cycle(3));
    CHECK(girth(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == Girth::cycle(4));
}

TEST_CASE("girth agrees with DFS cycle enumeration on random graphs") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + trial % 7;
        // Mix of girth-5 graphs and denser arbitrary graphs.
        Graph g = trial % 2 == 0 ? random_girth5_graph(rng, n, 6)
                                 : [&] {
                                       std::vector<Edge> edges;
                                       std::uniform_int_distribution<int> coin(0, 3);
                                       for (int u = 0; u < n; ++u)
                                           for (int v = u + 1; v < n; ++v)
                                               if (coin(rng) == 0) edges.emplace_back(u, v);
                                       return Graph(n, edges);
                                   }();
        int expected = oracle_shortest_cycle(g);
        Girth got = girth(g);
        if (expected == 0)
            CHECK(got.is_acyclic());
        else
            CHECK(got.value() == expected);
    }
}

TEST_CASE("girth >= 5 matches the local neighborhood condition") {
    // girth >= 5 iff no two adjacent vertices share a neighbor and no two
    // vertices share two neighbors.
    auto local_condition = [](const Graph& g) {
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                int common = 0;
                for (int w : g.neighbors(u))
                    if (g.has_edge(v, w)) ++common;
                if (g.has_edge(u, v) && common > 0) return false;  // triangle
                if (common >= 2) return false;                     // 4-cycle
            }
        return true;
    };
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + trial % 6;
        std::vector<Edge> edges;
        std::uniform_int_distribution<int> coin(0, 3);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        Girth gr = girth(g);
        bool girth_at_least_5 = gr.is_acyclic() || gr.value() >= 5;
        CHECK(girth_at_least_5 == local_condition(g));
    }
}

TEST_CASE("relabeling invariance of girth and distances") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_girth5_graph(rng, 9, 6);
        auto perm = random_permutation(rng, 9);
        Graph h = permuted_graph(g, perm);
        CHECK(girth(g) == girth(h));
        for (int u = 0; u < 9; ++u) {
            auto dg = bfs_distances(g, u);
            auto dh = bfs_distances(h, perm[u]);
            for (int v = 0; v < 9; ++v) CHECK(dg[v] == dh[perm[v]]);
        }
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(make_family(FamilySpec::cycle(6))));
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph(0, {})));
    CHECK_FALSE(is_connected(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
    CHECK_FALSE(is_connected(Graph(2, {})));
}

TEST_CASE("edge list round trip") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_girth5_graph(rng, 4 + trial % 9, trial);
        std::istringstream in(edge_list_string(g));
        CHECK(read_edge_list(in) == g);
        CHECK(parse_edge_list_line(edge_list_line(g)) == g);
    }
}

TEST_CASE("edge list accepts comments and rejects malformed input") {
    std::istringstream ok("# a comment\n3 2\n# interleaved\n0 1\n1 2\n");
    Graph g = read_edge_list(ok);
    CHECK(g.edge_count() == 2);

    auto rejects = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    };
    rejects("");
    rejects("# only comments\n");
    rejects("3\n");
    rejects("3 2 9\n");
    rejects("a b\n0 1\n");
    rejects("3 2\n0 1\n");          // missing edge line
    rejects("3 2\n0 1\n1 2\n0 2\n");  // extra content
    rejects("3 1\n0 1 2\n");        // malformed edge line
    rejects("-1 0\n");
    std::istringstream bad_vertex("2 1\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(bad_vertex), VertexOutOfRange);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), SelfLoop);
    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_edge_list(dup), DuplicateEdge);
}

TEST_CASE("writer emits sorted edges") {
    Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
    CHECK(edge_list_string(g) == "4 3\n0 1\n0 2\n2 3\n");
    CHECK(edge_list_line(g) == "4 3 0 1 0 2 2 3");
}
