#pragma once

// Fixtures and generators shared by the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "kcr/graph.hpp"
#include "kcr/oracle.hpp"
#include "kcr/random.hpp"

namespace kcr::testing {

inline Digraph diamond() { return build_digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

/// Two sources and two sinks funnelled through vertex 2.
inline Digraph crossing() { return build_digraph(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}); }

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return uniform_below(rng, bound); }

/// Random DAG instance with n <= max_n, m <= max_m and k demands; about
/// three quarters of the instances draw routable demands.
inline Instance random_case(std::mt19937_64& rng, std::uint32_t max_n, std::uint32_t max_m, std::uint32_t k,
                            std::uint32_t c) {
    const auto n = static_cast<std::uint32_t>(1 + below(rng, max_n));
    const std::uint32_t most = std::min<std::uint32_t>(max_m, n * (n - 1) / 2);
    const auto m = static_cast<std::uint32_t>(below(rng, most + 1));
    RandomInstanceParams params{n, m, k, c, below(rng, 4) != 0};
    return random_instance(params, rng());
}

/// Random instance whose 2k demand endpoints are pairwise distinct.
inline Instance random_distinct_endpoints(std::mt19937_64& rng, std::uint32_t max_n, std::uint32_t max_m,
                                          std::uint32_t k) {
    const auto n = static_cast<std::uint32_t>(2 * k + below(rng, max_n - 2 * k + 1));
    const std::uint32_t most = std::min<std::uint32_t>(max_m, n * (n - 1) / 2);
    const auto m = static_cast<std::uint32_t>(below(rng, most + 1));
    Instance inst = random_instance({n, m, 0, 1}, rng());
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    for (std::uint32_t i = n; i > 1; --i) std::swap(pool[i - 1], pool[below(rng, i)]);
    // Orient each pair along the topological order when possible.
    auto order = topological_order(inst.graph);
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
    for (std::uint32_t i = 0; i < k; ++i) {
        Vertex a = pool[2 * i];
        Vertex b = pool[2 * i + 1];
        if (position[a] > position[b]) std::swap(a, b);
        inst.demands.push_back({a, b});
    }
    return inst;
}

/// Relabels vertices by `perm` (old -> new) in graph and demands.
inline Instance permute(const Instance& inst, const std::vector<Vertex>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : inst.graph.edges()) edges.push_back({perm[e.tail], perm[e.head]});
    std::vector<Demand> demands;
    for (const Demand& d : inst.demands) demands.push_back({perm[d.source], perm[d.target]});
    return Instance{Digraph(inst.graph.num_vertices(), std::move(edges)), std::move(demands), inst.congestion};
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
    return perm;
}

/// Second, deliberately naive routing checker.
inline bool reference_accepts(const Instance& inst, const RoutingWitness& w) {
    if (w.paths.size() != inst.demands.size()) return false;
    std::set<std::pair<Vertex, Vertex>> arcs;
    for (const Edge& e : inst.graph.edges()) arcs.emplace(e.tail, e.head);
    std::vector<std::uint32_t> load(inst.graph.num_vertices(), 0);
    for (std::size_t i = 0; i < w.paths.size(); ++i) {
        const auto& vs = w.paths[i].vertices;
        if (vs.empty() || vs.front() != inst.demands[i].source || vs.back() != inst.demands[i].target) return false;
        std::set<Vertex> distinct(vs.begin(), vs.end());
        if (distinct.size() != vs.size()) return false;
        for (Vertex v : vs) {
            if (v >= inst.graph.num_vertices()) return false;
        }
        for (std::size_t p = 0; p + 1 < vs.size(); ++p) {
            if (!arcs.contains({vs[p], vs[p + 1]})) return false;
        }
        for (Vertex v : vs) ++load[v];
    }
    return std::all_of(load.begin(), load.end(), [&](std::uint32_t x) { return x <= inst.congestion; });
}

/// Pattern with prescribed edges over classes of the given sizes and
/// random host adjacency.
inline PsiInstance psi_with_pattern(std::mt19937_64& rng, std::uint32_t k, std::uint32_t split,
                                    std::vector<UEdge> pattern_edges, std::uint32_t max_n, std::uint32_t c,
                                    std::uint32_t edge_percent) {
    PsiInstance p;
    p.pattern_size = k;
    p.congestion = c;
    p.pattern_edges = std::move(pattern_edges);
    for (std::uint32_t u = 0; u < k; ++u) (u < split ? p.class_a : p.class_b).push_back(u);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto size = static_cast<std::uint32_t>(1 + below(rng, max_n));
        std::vector<std::uint32_t> cls;
        for (std::uint32_t z = 0; z < size; ++z) cls.push_back(next++);
        p.classes.push_back(std::move(cls));
    }
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = i + 1; j < k; ++j) {
            for (auto x : p.classes[i]) {
                for (auto y : p.classes[j]) {
                    if (below(rng, 100) < edge_percent) p.host_edges.emplace_back(x, y);
                }
            }
        }
    }
    return p;
}

/// Random PSI instance with a bipartite pattern (class_a = {0..a-1}).
/// Class sizes are drawn from 1..max_n, so padding is usually needed.
inline PsiInstance random_psi(std::mt19937_64& rng, std::uint32_t k, std::uint32_t max_n, std::uint32_t c,
                              std::uint32_t edge_percent) {
    const auto split = static_cast<std::uint32_t>(1 + below(rng, k - 1));
    std::vector<UEdge> pattern;
    for (std::uint32_t u = 0; u < split; ++u) {
        for (std::uint32_t v = split; v < k; ++v) {
            if (below(rng, 2) == 0) pattern.emplace_back(u, v);
        }
    }
    if (pattern.empty()) pattern.emplace_back(0, k - 1);
    return psi_with_pattern(rng, k, split, std::move(pattern), max_n, c, edge_percent);
}

}  // namespace kcr::testing
