#include "ricci/search.hpp"

#include "ricci/catalog.hpp"
#include "ricci/errors.hpp"
#include "ricci/transport.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <thread>
#include <utility>

namespace ricci {

namespace {

constexpr int kHardCap = 31;  // adjacency rows are uint32_t bitmasks

struct SmallGraph {
    int n = 0;
    std::array<std::uint32_t, kHardCap + 1> adj{};

    void add_edge(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    int degree(int v) const { return std::popcount(adj[v]); }
};

Graph to_graph(const SmallGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n; ++u) {
        std::uint32_t higher = g.adj[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            edges.emplace_back(u, v);
        }
    }
    return Graph(g.n, edges);
}

SmallGraph from_graph(const Graph& g) {
    SmallGraph s;
    s.n = g.vertex_count();
    for (auto [u, v] : g.edges()) s.add_edge(u, v);
    return s;
}

// Pairwise hop distances inside a partial graph; kUnreachable stays -1.
void all_distances(const SmallGraph& g, std::array<std::array<std::int8_t, kHardCap>, kHardCap>& dist) {
    for (int s = 0; s < g.n; ++s) {
        auto& row = dist[s];
        row.fill(-1);
        row[s] = 0;
        std::uint32_t frontier = 1u << s;
        std::uint32_t seen = frontier;
        std::int8_t depth = 0;
        while (frontier) {
            std::uint32_t next = 0;
            ++depth;
            std::uint32_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[u];
            }
            next &= ~seen;
            seen |= next;
            std::uint32_t nn = next;
            while (nn) {
                int v = std::countr_zero(nn);
                nn &= nn - 1;
                row[v] = depth;
            }
            frontier = next;
        }
    }
}

struct LevelEntry {
    CanonicalForm form;
    SmallGraph graph;  // stored in canonical labeling
};

// Degree-deficit feasibility: every vertex below min_degree must be served
// by distinct future vertices, and the future vertices have bounded stubs.
bool deficits_feasible(const SmallGraph& g, int future, const SearchOptions& opt) {
    int total_deficit = 0;
    for (int v = 0; v < g.n; ++v) {
        int deficit = std::max(0, opt.min_degree - g.degree(v));
        if (deficit > future) return false;
        total_deficit += deficit;
    }
    if (total_deficit > opt.max_degree * future) return false;
    if (opt.min_degree == opt.max_degree) {
        // Regular target: stubs from future vertices match deficits exactly.
        if (((opt.max_degree * future - total_deficit) & 1) != 0) return false;
    }
    return true;
}

// All ways to attach one new vertex to `g` without violating the degree cap
// or creating a cycle shorter than min_girth (a new cycle through the new
// vertex has length dist(a,b) + 2 for attachment points a, b).
void extend(const SmallGraph& g, int target_n, const SearchOptions& opt,
            std::vector<LevelEntry>& out) {
    const int future_after = target_n - (g.n + 1);
    std::array<std::array<std::int8_t, kHardCap>, kHardCap> dist;
    all_distances(g, dist);

    std::vector<int> open;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < opt.max_degree) open.push_back(v);

    const int min_sep = opt.min_girth - 2;
    auto compatible = [&](int a, int b) {
        int d = dist[a][b];
        return d == -1 || d >= min_sep;
    };

    auto emit = [&](std::initializer_list<int> attach) {
        SmallGraph next = g;
        next.n = g.n + 1;
        next.adj[g.n] = 0;
        for (int a : attach) next.add_edge(g.n, a);
        if (!deficits_feasible(next, future_after, opt)) return;
        auto [form, relabeled] = canonicalize_graph(to_graph(next));
        out.push_back({std::move(form), from_graph(relabeled)});
    };

    for (size_t i = 0; i < open.size(); ++i) {
        emit({open[i]});
        if (opt.max_degree < 2) continue;
        for (size_t j = i + 1; j < open.size(); ++j) {
            if (!compatible(open[i], open[j])) continue;
            emit({open[i], open[j]});
            if (opt.max_degree < 3) continue;
            for (size_t k = j + 1; k < open.size(); ++k) {
                if (!compatible(open[i], open[k]) || !compatible(open[j], open[k])) continue;
                emit({open[i], open[j], open[k]});
            }
        }
    }
}

void sort_and_dedup(std::vector<LevelEntry>& level) {
    std::sort(level.begin(), level.end(),
              [](const LevelEntry& a, const LevelEntry& b) { return a.form < b.form; });
    level.erase(std::unique(level.begin(), level.end(),
                            [](const LevelEntry& a, const LevelEntry& b) { return a.form == b.form; }),
                level.end());
}

// One growth level across all current representatives, optionally fanned out
// over workers; the per-worker outputs are merged and deduplicated, so the
// result does not depend on the worker count.
std::vector<LevelEntry> grow_level(const std::vector<LevelEntry>& current, int target_n,
                                   const SearchOptions& opt) {
    const int workers = std::max(1, opt.workers);
    std::vector<LevelEntry> merged;
    if (workers == 1 || current.size() < 2) {
        for (const auto& entry : current) extend(entry.graph, target_n, opt, merged);
    } else {
        std::vector<std::vector<LevelEntry>> partial(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (size_t i = w; i < current.size(); i += workers)
                    extend(current[i].graph, target_n, opt, partial[w]);
            });
        }
        for (auto& t : pool) t.join();
        for (auto& p : partial)
            merged.insert(merged.end(), std::make_move_iterator(p.begin()),
                          std::make_move_iterator(p.end()));
    }
    sort_and_dedup(merged);
    return merged;
}

void check_options(int n, const SearchOptions& opt) {
    if (opt.min_degree < 2 || opt.min_degree > opt.max_degree || opt.max_degree > 3)
        throw InvalidSpec("degree bounds must satisfy 2 <= min <= max <= 3");
    if (opt.min_girth < 5) throw InvalidSpec("min_girth must be >= 5");
    if (n < 1) throw InvalidSpec("vertex count must be positive");
    if (n > opt.vertex_limit || opt.vertex_limit > kHardCap)
        throw LimitExceeded("enumeration limited to n <= " +
                            std::to_string(std::min(opt.vertex_limit, kHardCap)));
}

// Necessary condition from the two-5-cycle lemma: a 3-3 edge of a flat graph
// carries an opposite pair of C5 slots. Bitmask check, no transport solves.
bool opposite_pair_prefilter(const SmallGraph& g) {
    auto slot = [&](int a, int x, int y, int b) {
        if (a == b) return false;
        std::uint32_t common = g.adj[a] & g.adj[b] & ~((1u << x) | (1u << y));
        return common != 0;
    };
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) != 3) continue;
        std::uint32_t nbx = g.adj[x] >> x >> 1 << (x + 1);  // neighbors above x
        std::uint32_t ys = nbx;
        while (ys) {
            int y = std::countr_zero(ys);
            ys &= ys - 1;
            if (g.degree(y) != 3) continue;
            int xs[2], ysn[2], xi = 0, yi = 0;
            std::uint32_t mx = g.adj[x] & ~(1u << y);
            while (mx) {
                xs[xi++] = std::countr_zero(mx);
                mx &= mx - 1;
            }
            std::uint32_t my = g.adj[y] & ~(1u << x);
            while (my) {
                ysn[yi++] = std::countr_zero(my);
                my &= my - 1;
            }
            bool s11 = slot(xs[0], x, y, ysn[0]);
            bool s12 = slot(xs[0], x, y, ysn[1]);
            bool s21 = slot(xs[1], x, y, ysn[0]);
            bool s22 = slot(xs[1], x, y, ysn[1]);
            if (!((s11 && s22) || (s12 && s21))) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const SearchOptions& options) {
    check_options(n, options);

    std::vector<LevelEntry> level;
    {
        SmallGraph seed;
        seed.n = 1;
        level.push_back({canonical_form(to_graph(seed)), seed});
        if (!deficits_feasible(seed, n - 1, options)) level.clear();
    }
    for (int size = 1; size < n && !level.empty(); ++size)
        level = grow_level(level, n, options);

    std::vector<Graph> out;
    for (const auto& entry : level) {
        bool ok = true;
        for (int v = 0; v < entry.graph.n && ok; ++v)
            ok = entry.graph.degree(v) >= options.min_degree;
        if (ok) out.push_back(to_graph(entry.graph));
    }
    return out;
}

std::string match_catalog_family(int n, const CanonicalForm& form) {
    std::vector<FamilySpec> candidates;
    if (n >= 3) candidates.push_back(FamilySpec::cycle(n));
    if (n == 10) candidates.push_back(FamilySpec::petersen());
    if (n == 12) candidates.push_back(FamilySpec::triplex());
    if (n == 15) candidates.push_back(FamilySpec::half_dodecahedral());
    if (n == 20) candidates.push_back(FamilySpec::dodecahedral());
    for (const auto& spec : candidates)
        if (canonical_form(make_family(spec)) == form) return spec.name();
    return "UNKNOWN";
}

std::vector<CensusRecord> classify_ricci_flat(int max_n, const SearchOptions& options) {
    check_options(std::max(1, max_n), options);
    std::vector<CensusRecord> records;
    for (int n = 5; n <= max_n; ++n) {
        CensusRecord record;
        record.n = n;
        record.min_degree = options.min_degree;
        record.max_degree = options.max_degree;
        record.min_girth = options.min_girth;
        for (const Graph& g : enumerate_graphs(n, options)) {
            ++record.enumerated_count;
            if (!opposite_pair_prefilter(from_graph(g))) continue;
            if (!is_ricci_flat(g).flat) continue;
            CanonicalForm form = canonical_form(g);
            record.ricci_flat.push_back({form, g, match_catalog_family(n, form)});
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<ExpectedFlat> expected_ricci_flat(int max_n, int min_degree, int max_degree) {
    std::vector<ExpectedFlat> expected;
    auto add = [&](int n, const FamilySpec& spec) {
        if (n <= max_n)
            expected.push_back({n, spec.name(), canonical_form(make_family(spec))});
    };
    if (min_degree <= 2)
        for (int k = 6; k <= max_n; ++k) add(k, FamilySpec::cycle(k));
    if (max_degree >= 3) {
        add(10, FamilySpec::petersen());
        add(12, FamilySpec::triplex());
        add(20, FamilySpec::dodecahedral());
        if (min_degree <= 2) add(15, FamilySpec::half_dodecahedral());
    }
    std::sort(expected.begin(), expected.end(), [](const ExpectedFlat& a, const ExpectedFlat& b) {
        return a.n != b.n ? a.n < b.n : a.form < b.form;
    });
    return expected;
}

}  // namespace ricci
