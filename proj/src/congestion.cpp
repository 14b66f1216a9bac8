#include "kcr/congestion.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kcr {

ProductInstance build_product(const Digraph& g, std::span<const Demand> demands, std::uint32_t congestion) {
    if (congestion < 1) throw InvalidInput("congestion must be at least 1");
    const std::size_t n = g.num_vertices();
    const std::size_t k = demands.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (!g.contains(demands[i].source) || !g.contains(demands[i].target)) {
            throw InvalidInput("demand " + std::to_string(i) + " endpoint out of range");
        }
    }

    ProductInstance p;
    p.original_vertices = n;
    p.layers = congestion;
    p.origin.resize(congestion * n + 2 * k);
    for (std::uint32_t layer = 0; layer < congestion; ++layer) {
        for (Vertex v = 0; v < n; ++v) {
            p.origin[layer * n + v] = {ProductOrigin::Kind::copy, v, layer};
        }
    }
    p.demands.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        p.origin[congestion * n + i] = {ProductOrigin::Kind::source, static_cast<std::uint32_t>(i), 0};
        p.origin[congestion * n + k + i] = {ProductOrigin::Kind::sink, static_cast<std::uint32_t>(i), 0};
    }
    // fresh_source/fresh_sink read demands.size(), so size it before use.
    for (std::size_t i = 0; i < k; ++i) p.demands[i] = {p.fresh_source(i), p.fresh_sink(i)};

    std::vector<Edge> edges;
    edges.reserve(g.num_edges() * congestion * congestion + 2 * k * congestion);
    for (const Edge& e : g.edges()) {
        for (std::uint32_t a = 0; a < congestion; ++a) {
            for (std::uint32_t b = 0; b < congestion; ++b) {
                edges.push_back({p.copy(e.tail, a), p.copy(e.head, b)});
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::uint32_t a = 0; a < congestion; ++a) edges.push_back({p.fresh_source(i), p.copy(demands[i].source, a)});
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::uint32_t a = 0; a < congestion; ++a) edges.push_back({p.copy(demands[i].target, a), p.fresh_sink(i)});
    }
    p.graph = Digraph(p.origin.size(), std::move(edges));
    return p;
}

RoutingWitness project_witness(const ProductInstance& p, const RoutingWitness& product_witness) {
    Instance product{p.graph, p.demands, 1};
    RoutingVerdict verdict = check_routing(product, product_witness);
    if (!verdict.accepted()) throw InvalidInput("product witness rejected: " + verdict.message);

    RoutingWitness projected;
    projected.paths.reserve(product_witness.paths.size());
    std::vector<bool> seen(p.original_vertices, false);
    for (const Path& path : product_witness.paths) {
        Path out;
        // Drop the fresh terminals at both ends.
        for (std::size_t pos = 1; pos + 1 < path.vertices.size(); ++pos) {
            const ProductOrigin& o = p.origin[path.vertices[pos]];
            if (o.kind != ProductOrigin::Kind::copy) throw InvalidInput("fresh terminal inside a product path");
            if (seen[o.index]) {
                throw InvalidInput("projection revisits vertex " + std::to_string(o.index) +
                                   "; original graph is not acyclic");
            }
            seen[o.index] = true;
            out.vertices.push_back(o.index);
        }
        for (Vertex v : out.vertices) seen[v] = false;
        projected.paths.push_back(std::move(out));
    }
    return projected;
}

CongestionResult solve_congestion(const Digraph& g, std::span<const Demand> demands, std::uint32_t congestion,
                                  const CongestionOptions& options) {
    if (congestion < 1) throw InvalidInput("congestion must be at least 1");
    if (!is_acyclic(g)) throw CyclicGraph();
    CongestionResult result;
    for (const Demand& d : demands) {
        if (!g.contains(d.source) || !g.contains(d.target)) throw InvalidInput("demand endpoint out of range");
        if (!reachable_set(g, d.source)[d.target]) return result;
    }
    ProductInstance product = build_product(g, demands, congestion);
    DisjointPathsResult solved = solve_vertex_disjoint(product.graph, product.demands, {options.state_cap});
    result.states_visited = solved.states_visited;
    if (solved.witness) result.witness = project_witness(product, *solved.witness);
    return result;
}

Path fallback_path(const Digraph& g, const Demand& d) {
    if (!g.contains(d.source) || !g.contains(d.target)) throw InvalidInput("demand endpoint out of range");
    constexpr Vertex unvisited = static_cast<Vertex>(-1);
    std::vector<Vertex> parent(g.num_vertices(), unvisited);
    std::queue<Vertex> frontier;
    parent[d.source] = d.source;
    frontier.push(d.source);
    while (!frontier.empty() && parent[d.target] == unvisited) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : g.out_neighbors(v)) {
            if (parent[w] == unvisited) {
                parent[w] = v;
                frontier.push(w);
            }
        }
    }
    if (parent[d.target] == unvisited) {
        throw Unreachable("no path from " + std::to_string(d.source) + " to " + std::to_string(d.target));
    }
    Path p;
    for (Vertex v = d.target; v != d.source; v = parent[v]) p.vertices.push_back(v);
    p.vertices.push_back(d.source);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) return out;
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        out.push_back(pick);
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

namespace {

/// Steps shared by the serial and parallel variants. Returns a finished
/// result unless the subset scan is needed.
std::optional<HighCongestionResult> settle_without_subsets(const Digraph& g, std::span<const Demand> demands,
                                                           std::size_t offset, const HighCongestionOptions& options) {
    const std::size_t k = demands.size();
    if (offset > 0 && offset >= k) {
        throw InvalidInput("offset d=" + std::to_string(offset) + " leaves congestion k-d < 1 for k=" +
                           std::to_string(k));
    }
    if (!is_acyclic(g)) throw CyclicGraph();

    HighCongestionResult result;
    for (const Demand& d : demands) {
        if (!g.contains(d.source) || !g.contains(d.target)) throw InvalidInput("demand endpoint out of range");
        if (!reachable_set(g, d.source)[d.target]) return result;
    }
    if (offset == 0) {
        result.branch = HighCongestionResult::Branch::trivial;
        RoutingWitness w;
        for (const Demand& d : demands) w.paths.push_back(fallback_path(g, d));
        result.witness = std::move(w);
        return result;
    }
    if (k <= 3 * offset) {
        result.branch = HighCongestionResult::Branch::direct;
        CongestionResult direct =
            solve_congestion(g, demands, static_cast<std::uint32_t>(k - offset), {options.state_cap});
        result.states_visited = direct.states_visited;
        result.witness = std::move(direct.witness);
        return result;
    }
    return std::nullopt;
}

std::vector<Demand> select(std::span<const Demand> demands, const std::vector<std::size_t>& subset) {
    std::vector<Demand> out;
    out.reserve(subset.size());
    for (std::size_t i : subset) out.push_back(demands[i]);
    return out;
}

RoutingWitness assemble(const Digraph& g, std::span<const Demand> demands, const std::vector<std::size_t>& subset,
                        const RoutingWitness& sub_witness) {
    RoutingWitness w;
    w.paths.resize(demands.size());
    std::vector<bool> inside(demands.size(), false);
    for (std::size_t j = 0; j < subset.size(); ++j) {
        inside[subset[j]] = true;
        w.paths[subset[j]] = sub_witness.paths[j];
    }
    for (std::size_t i = 0; i < demands.size(); ++i) {
        if (!inside[i]) w.paths[i] = fallback_path(g, demands[i]);
    }
    return w;
}

}  // namespace

HighCongestionResult solve_high_congestion_serial(const Digraph& g, std::span<const Demand> demands,
                                                  std::size_t offset, const HighCongestionOptions& options) {
    if (auto settled = settle_without_subsets(g, demands, offset, options)) return *std::move(settled);

    HighCongestionResult result;
    result.branch = HighCongestionResult::Branch::subsets;
    const auto sub_congestion = static_cast<std::uint32_t>(2 * offset);
    for (const auto& subset : lexicographic_subsets(demands.size(), 3 * offset)) {
        ++result.subsets_tried;
        CongestionResult sub = solve_congestion(g, select(demands, subset), sub_congestion, {options.state_cap});
        result.states_visited += sub.states_visited;
        if (sub.witness) {
            result.witness = assemble(g, demands, subset, *sub.witness);
            result.chosen_subset = subset;
            break;
        }
    }
    return result;
}

HighCongestionResult solve_high_congestion(const Digraph& g, std::span<const Demand> demands, std::size_t offset,
                                           const HighCongestionOptions& options) {
    if (options.jobs == 1) return solve_high_congestion_serial(g, demands, offset, options);
    if (auto settled = settle_without_subsets(g, demands, offset, options)) return *std::move(settled);

    const auto subsets = lexicographic_subsets(demands.size(), 3 * offset);
    const auto count = static_cast<std::ptrdiff_t>(subsets.size());
    const auto sub_congestion = static_cast<std::uint32_t>(2 * offset);

    std::vector<CongestionResult> outcomes(subsets.size());
    std::vector<char> checked(subsets.size(), 0);
    std::atomic<std::ptrdiff_t> first_success{count};
    std::atomic<std::ptrdiff_t> first_failure{count};
    std::exception_ptr failure;

    int threads = options.jobs;
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#endif
    (void)threads;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
        const std::ptrdiff_t best = first_success.load();
        if (options.deterministic ? idx > best : best != count) continue;
        if (first_failure.load() < idx) continue;
        try {
            outcomes[idx] = solve_congestion(g, select(demands, subsets[idx]), sub_congestion, {options.state_cap});
            checked[idx] = 1;
            if (outcomes[idx].witness) {
                std::ptrdiff_t seen = first_success.load();
                while (idx < seen && !first_success.compare_exchange_weak(seen, idx)) {
                }
            }
        } catch (...) {
#pragma omp critical(kcr_subset_failure)
            {
                if (idx < first_failure.load()) {
                    first_failure.store(idx);
                    failure = std::current_exception();
                }
            }
        }
    }

    const std::ptrdiff_t winner = first_success.load();
    // A sequential scan would have hit the failure before any later success.
    if (failure && (options.deterministic ? first_failure.load() < winner : winner == count)) {
        std::rethrow_exception(failure);
    }

    HighCongestionResult result;
    result.branch = HighCongestionResult::Branch::subsets;
    if (options.deterministic) {
        const std::ptrdiff_t last = winner == count ? count - 1 : winner;
        result.subsets_tried = static_cast<std::size_t>(last + 1);
        for (std::ptrdiff_t idx = 0; idx <= last; ++idx) result.states_visited += outcomes[idx].states_visited;
    } else {
        for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
            if (!checked[idx]) continue;
            ++result.subsets_tried;
            result.states_visited += outcomes[idx].states_visited;
        }
    }
    if (winner != count) {
        result.witness = assemble(g, demands, subsets[winner], *outcomes[winner].witness);
        result.chosen_subset = subsets[winner];
    }
    return result;
}

}  // namespace kcr
