#include "ricci/transport.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <vector>

namespace ricci {

namespace {

constexpr long long kInfCost = std::numeric_limits<long long>::max() / 4;

}  // namespace

Measure::Measure(std::map<int, Rational> weights) {
    Rational total;
    for (auto& [v, w] : weights) {
        if (v < 0) throw VertexOutOfRange(v, 0);
        if (w.sign() < 0) throw InvalidSpec("measure weight at vertex " + std::to_string(v) + " is negative");
        if (w.is_zero()) continue;
        total += w;
        weights_.emplace(v, w);
    }
    if (total != Rational(1))
        throw InvalidSpec("measure weights sum to " + total.str() + ", expected 1/1");
}

Rational Measure::at(int v) const {
    auto it = weights_.find(v);
    return it == weights_.end() ? Rational() : it->second;
}

Measure lazy_measure(const Graph& g, int x, const Rational& alpha) {
    if (alpha.sign() < 0 || alpha > Rational(1)) throw AlphaOutOfRange(alpha.str());
    int d = g.degree(x);
    if (d == 0 && alpha != Rational(1)) throw IsolatedVertex(x);
    std::map<int, Rational> w;
    w[x] = alpha;
    if (alpha != Rational(1)) {
        Rational share = (Rational(1) - alpha) / Rational(d);
        for (int v : g.neighbors(x)) w[v] = share;
    }
    return Measure(std::move(w));
}

namespace {

// Pairwise hop distances between support vertices; throws if the support
// union spans more than one component.
std::vector<std::vector<int>> support_distances(const Graph& g, const std::vector<int>& support) {
    std::vector<std::vector<int>> dist(support.size());
    for (size_t i = 0; i < support.size(); ++i) {
        auto all = bfs_distances(g, support[i]);
        dist[i].resize(support.size());
        for (size_t j = 0; j < support.size(); ++j) {
            if (all[support[j]] == kUnreachable) throw DisconnectedSupports();
            dist[i][j] = all[support[j]];
        }
    }
    return dist;
}

struct ScaledProblem {
    BigInt scale;                     // common denominator L
    std::vector<int> sources;        // indices into the support vector
    std::vector<int> sinks;
    std::vector<BigInt> supply;      // parallel to sources
    std::vector<BigInt> demand;      // parallel to sinks
};

// Min-cost flow on the bipartite reduced problem by successive shortest
// augmenting paths with vertex potentials (Dijkstra on reduced costs).
// Costs are hop distances; all mass arithmetic is exact integers.
std::vector<std::vector<BigInt>> solve_min_cost_flow(const ScaledProblem& p,
                                                     const std::vector<std::vector<long long>>& cost) {
    const size_t ns = p.sources.size(), nt = p.sinks.size();
    std::vector<std::vector<BigInt>> flow(ns, std::vector<BigInt>(nt, BigInt(0)));
    std::vector<BigInt> supply = p.supply, demand = p.demand;
    std::vector<long long> pot_src(ns, 0), pot_snk(nt, 0);

    BigInt remaining = 0;
    for (const auto& s : supply) remaining += s;

    int guard = 0;
    while (remaining > 0) {
        if (++guard > 10000) throw std::logic_error("min-cost flow failed to terminate");

        // Dijkstra over sources(0..ns-1) and sinks(ns..ns+nt-1); linear scan
        // is ample at these sizes.
        const size_t total = ns + nt;
        std::vector<long long> dist(total, kInfCost);
        std::vector<int> parent(total, -1);
        std::vector<bool> done(total, false);
        for (size_t i = 0; i < ns; ++i)
            if (supply[i] > 0) dist[i] = 0;
        while (true) {
            size_t u = total;
            for (size_t v = 0; v < total; ++v)
                if (!done[v] && dist[v] < kInfCost && (u == total || dist[v] < dist[u])) u = v;
            if (u == total) break;
            done[u] = true;
            if (u < ns) {
                for (size_t j = 0; j < nt; ++j) {
                    long long rc = cost[u][j] - pot_src[u] + pot_snk[j];
                    if (dist[u] + rc < dist[ns + j]) {
                        dist[ns + j] = dist[u] + rc;
                        parent[ns + j] = static_cast<int>(u);
                    }
                }
            } else {
                size_t j = u - ns;
                for (size_t i = 0; i < ns; ++i) {
                    if (flow[i][j] > 0) {
                        long long rc = -cost[i][j] - pot_snk[j] + pot_src[i];
                        if (dist[u] + rc < dist[i]) {
                            dist[i] = dist[u] + rc;
                            parent[i] = static_cast<int>(u);
                        }
                    }
                }
            }
        }

        size_t target = total;
        for (size_t j = 0; j < nt; ++j)
            if (demand[j] > 0 && dist[ns + j] < kInfCost &&
                (target == total || dist[ns + j] < dist[target]))
                target = ns + j;
        if (target == total) throw std::logic_error("min-cost flow: no augmenting path");

        // Bottleneck along the path.
        BigInt bottleneck = demand[target - ns];
        for (size_t v = target; parent[v] != -1; v = parent[v]) {
            size_t u = parent[v];
            if (v < ns) bottleneck = std::min(bottleneck, flow[v][u - ns]);  // residual arc
        }
        {
            size_t v = target;
            while (parent[v] != -1) v = parent[v];
            bottleneck = std::min(bottleneck, supply[v]);
        }
        assert(bottleneck > 0);

        // Apply.
        for (size_t v = target; parent[v] != -1; v = parent[v]) {
            size_t u = parent[v];
            if (u < ns)
                flow[u][v - ns] += bottleneck;
            else
                flow[v][u - ns] -= bottleneck;
        }
        {
            size_t v = target;
            while (parent[v] != -1) v = parent[v];
            supply[v] -= bottleneck;
        }
        demand[target - ns] -= bottleneck;
        remaining -= bottleneck;

        // Johnson-style potential update; untouched nodes keep their value,
        // which preserves nonnegative reduced costs on every residual arc.
        for (size_t i = 0; i < ns; ++i)
            if (dist[i] < kInfCost) pot_src[i] += dist[i];
        for (size_t j = 0; j < nt; ++j)
            if (dist[ns + j] < kInfCost) pot_snk[j] += dist[ns + j];
    }
    return flow;
}

// Integer dual potentials from the difference-constraint system:
//   |phi(a) - phi(b)| <= d(a,b) for all support pairs,
//   phi(u) - phi(v) >= d(u,v) whenever flow(u,v) > 0.
// Feasible exactly when the flow is optimal; solved by Bellman-Ford.
std::vector<long long> dual_potentials(const std::vector<std::vector<int>>& dist,
                                       const std::vector<std::pair<size_t, size_t>>& flow_pairs) {
    const size_t k = dist.size();
    struct Constraint {
        size_t from, to;
        long long weight;
    };  // phi(to) <= phi(from) + weight
    std::vector<Constraint> constraints;
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            if (a != b) constraints.push_back({b, a, dist[a][b]});
    for (auto [u, v] : flow_pairs)
        if (u != v) constraints.push_back({u, v, -static_cast<long long>(dist[u][v])});

    std::vector<long long> phi(k, 0);
    for (size_t round = 0; round + 1 < k; ++round) {
        bool changed = false;
        for (const auto& c : constraints) {
            if (phi[c.from] + c.weight < phi[c.to]) {
                phi[c.to] = phi[c.from] + c.weight;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (const auto& c : constraints)
        if (phi[c.from] + c.weight < phi[c.to])
            throw std::logic_error("dual potentials infeasible: flow is not optimal");
    return phi;
}

}  // namespace

std::pair<Rational, TransportCertificate> wasserstein(const Graph& g, const Measure& mu,
                                                      const Measure& nu) {
    // Support union, sorted.
    std::vector<int> support;
    for (const auto& [v, w] : mu.weights()) support.push_back(v);
    for (const auto& [v, w] : nu.weights()) support.push_back(v);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (int v : support)
        if (v >= g.vertex_count()) throw VertexOutOfRange(v, g.vertex_count());

    auto dist = support_distances(g, support);

    // Scale both measures by a common denominator to integer masses.
    BigInt scale = 1;
    for (const auto& [v, w] : mu.weights()) scale = lcm(scale, w.den());
    for (const auto& [v, w] : nu.weights()) scale = lcm(scale, w.den());

    // Reduced problem: route only the signed difference; shared mass stays put.
    ScaledProblem problem;
    problem.scale = scale;
    for (size_t i = 0; i < support.size(); ++i) {
        Rational diff = mu.at(support[i]) - nu.at(support[i]);
        if (diff.sign() > 0) {
            problem.sources.push_back(static_cast<int>(i));
            problem.supply.push_back((diff * Rational(scale)).num());
        } else if (diff.sign() < 0) {
            problem.sinks.push_back(static_cast<int>(i));
            problem.demand.push_back(((-diff) * Rational(scale)).num());
        }
    }

    std::vector<std::vector<long long>> cost(problem.sources.size(),
                                             std::vector<long long>(problem.sinks.size(), 0));
    for (size_t i = 0; i < problem.sources.size(); ++i)
        for (size_t j = 0; j < problem.sinks.size(); ++j)
            cost[i][j] = dist[problem.sources[i]][problem.sinks[j]];

    auto flow = solve_min_cost_flow(problem, cost);

    BigInt scaled_cost = 0;
    for (size_t i = 0; i < problem.sources.size(); ++i)
        for (size_t j = 0; j < problem.sinks.size(); ++j)
            scaled_cost += flow[i][j] * cost[i][j];

    TransportCertificate cert;
    cert.cost = Rational(scaled_cost, scale);

    // Full transport plan: shared mass on the diagonal plus the routed flow.
    for (int v : support) {
        Rational shared = std::min(mu.at(v), nu.at(v));
        if (shared.sign() > 0) cert.flow[{v, v}] = shared;
    }
    std::vector<std::pair<size_t, size_t>> flow_pairs;  // support indices
    for (size_t i = 0; i < problem.sources.size(); ++i)
        for (size_t j = 0; j < problem.sinks.size(); ++j)
            if (flow[i][j] > 0) {
                size_t a = problem.sources[i], b = problem.sinks[j];
                cert.flow[{support[a], support[b]}] = Rational(flow[i][j], scale);
                flow_pairs.emplace_back(a, b);
            }

    auto phi = dual_potentials(dist, flow_pairs);
    for (size_t i = 0; i < support.size(); ++i) cert.potentials[support[i]] = phi[i];

    return {cert.cost, cert};
}

CertificateCheck validate_certificate(const Graph& g, const Measure& mu, const Measure& nu,
                                      const TransportCertificate& cert) {
    std::map<int, Rational> out_mass, in_mass;
    Rational total_cost;
    std::vector<int> support;
    for (const auto& [v, w] : mu.weights()) support.push_back(v);
    for (const auto& [v, w] : nu.weights()) support.push_back(v);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    std::map<int, std::vector<int>> dist_from;
    auto distance = [&](int a, int b) {
        auto it = dist_from.find(a);
        if (it == dist_from.end()) it = dist_from.emplace(a, bfs_distances(g, a)).first;
        return it->second[b];
    };

    for (const auto& [pair, amount] : cert.flow) {
        auto [u, v] = pair;
        if (amount.sign() < 0) return {false, "negative flow value"};
        int d = distance(u, v);
        if (d == kUnreachable) return {false, "flow across disconnected vertices"};
        out_mass[u] += amount;
        in_mass[v] += amount;
        total_cost += amount * Rational(d);
    }
    for (int v : support) {
        if (out_mass[v] != mu.at(v)) return {false, "source marginal mismatch at vertex " + std::to_string(v)};
        if (in_mass[v] != nu.at(v)) return {false, "target marginal mismatch at vertex " + std::to_string(v)};
    }
    for (const auto& [v, m] : out_mass)
        if (m != mu.at(v)) return {false, "flow out of non-support vertex " + std::to_string(v)};
    for (const auto& [v, m] : in_mass)
        if (m != nu.at(v)) return {false, "flow into non-support vertex " + std::to_string(v)};
    if (total_cost != cert.cost) return {false, "flow cost does not match certified cost"};

    // 1-Lipschitz potentials on the support union.
    for (int a : support) {
        if (!cert.potentials.count(a)) return {false, "missing potential at vertex " + std::to_string(a)};
    }
    for (int a : support)
        for (int b : support) {
            if (a == b) continue;
            long long diff = cert.potentials.at(a) - cert.potentials.at(b);
            if (diff > distance(a, b)) return {false, "potentials not 1-Lipschitz"};
        }

    // Zero duality gap: sum phi d(mu - nu) must equal the certified cost.
    Rational dual_value;
    for (int a : support) dual_value += Rational(cert.potentials.at(a)) * (mu.at(a) - nu.at(a));
    if (dual_value != cert.cost) return {false, "duality gap is nonzero"};

    return {true, ""};
}

Rational kappa_alpha(const Graph& g, int x, int y, const Rational& alpha) {
    if (!g.has_edge(x, y)) throw NotAnEdge(x, y);
    if (alpha.sign() < 0 || alpha > Rational(1)) throw AlphaOutOfRange(alpha.str());
    auto [w, cert] = wasserstein(g, lazy_measure(g, x, alpha), lazy_measure(g, y, alpha));
    return Rational(1) - w;
}

Rational lly_curvature(const Graph& g, int x, int y) {
    Rational half(1, 2), two_thirds(2, 3);
    Rational from_half = kappa_alpha(g, x, y, half) * Rational(2);
    Rational from_two_thirds = kappa_alpha(g, x, y, two_thirds) * Rational(3);
    if (from_half != from_two_thirds)
        throw LinearityViolation(x, y, from_half, from_two_thirds);
    return from_half;
}

FlatnessVerdict is_ricci_flat(const Graph& g) {
    if (g.edge_count() == 0) throw EmptyGraph();
    for (auto [u, v] : g.edges()) {
        Rational k = lly_curvature(g, u, v);
        if (!k.is_zero()) return {false, {u, v}, k};
    }
    return {true, {-1, -1}, Rational()};
}

}  // namespace ricci
