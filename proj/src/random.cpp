#include "kcr/random.hpp"

#include <algorithm>
#include <limits>

namespace kcr {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Reject the top partial bucket.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Instance random_instance(const RandomInstanceParams& params, std::uint64_t seed) {
    const std::uint64_t n = params.vertices;
    if (n == 0) throw InvalidInput("need at least one vertex");
    if (params.edges > n * (n - 1) / 2) {
        throw InvalidInput("cannot place " + std::to_string(params.edges) + " edges in a DAG on " + std::to_string(n) +
                           " vertices");
    }
    if (params.congestion == 0) throw InvalidInput("congestion must be at least 1");

    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (std::uint64_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);

    std::vector<Edge> forward;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) forward.push_back({perm[i], perm[j]});
    }
    // Partial Fisher-Yates: the first `edges` entries form a uniform sample.
    for (std::uint64_t i = 0; i < params.edges; ++i) {
        std::swap(forward[i], forward[i + uniform_below(rng, forward.size() - i)]);
    }
    forward.resize(params.edges);
    std::sort(forward.begin(), forward.end());

    Digraph g(n, std::move(forward));
    std::vector<Demand> demands;
    for (std::uint32_t i = 0; i < params.demands; ++i) {
        auto s = static_cast<Vertex>(uniform_below(rng, n));
        Vertex t;
        if (params.routable_demands) {
            std::vector<Vertex> reach;
            auto mask = reachable_set(g, s);
            for (Vertex v = 0; v < n; ++v) {
                if (mask[v]) reach.push_back(v);
            }
            t = reach[uniform_below(rng, reach.size())];
        } else {
            t = static_cast<Vertex>(uniform_below(rng, n));
        }
        demands.push_back({s, t});
    }
    return Instance{std::move(g), std::move(demands), params.congestion};
}

}  // namespace kcr
