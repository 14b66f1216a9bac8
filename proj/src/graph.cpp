#include "kcr/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace kcr {

Digraph::Digraph(std::size_t num_vertices, std::vector<Edge> edges)
    : edges_(std::move(edges)), out_(num_vertices), in_(num_vertices) {
    for (const Edge& e : edges_) {
        if (e.tail >= num_vertices || e.head >= num_vertices) {
            throw InvalidInput("edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                               ") has an endpoint outside [0," + std::to_string(num_vertices) + ")");
        }
        if (e.tail == e.head) {
            throw InvalidInput("loop edge at vertex " + std::to_string(e.tail));
        }
        out_[e.tail].push_back(e.head);
        in_[e.head].push_back(e.tail);
    }
    auto normalize = [](std::vector<Vertex>& list) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    };
    for (auto& list : out_) normalize(list);
    for (auto& list : in_) normalize(list);
}

bool Digraph::has_edge(Vertex tail, Vertex head) const {
    if (!contains(tail) || !contains(head)) return false;
    const auto& list = out_[tail];
    return std::binary_search(list.begin(), list.end(), head);
}

void Instance::validate() const {
    if (congestion == 0) throw InvalidInput("congestion must be at least 1");
    for (std::size_t i = 0; i < demands.size(); ++i) {
        if (!graph.contains(demands[i].source) || !graph.contains(demands[i].target)) {
            throw InvalidInput("demand " + std::to_string(i) + " has an endpoint out of range");
        }
    }
}

std::uint32_t CongestionProfile::max() const {
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

Digraph build_digraph(std::size_t num_vertices, std::vector<Edge> edges) {
    return Digraph(num_vertices, std::move(edges));
}

std::vector<Vertex> topological_order(const Digraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> indegree(n);
    for (Vertex v = 0; v < n; ++v) indegree[v] = g.in_neighbors(v).size();

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Vertex w : g.out_neighbors(v)) {
            if (--indegree[w] == 0) ready.push(w);
        }
    }
    if (order.size() != n) throw CyclicGraph();
    return order;
}

bool is_acyclic(const Digraph& g) {
    try {
        topological_order(g);
        return true;
    } catch (const CyclicGraph&) {
        return false;
    }
}

namespace {

template <typename Next>
std::vector<bool> sweep(const Digraph& g, Vertex start, Next next) {
    if (!g.contains(start)) {
        throw InvalidInput("vertex " + std::to_string(start) + " out of range");
    }
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<Vertex> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : next(v)) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<bool> reachable_set(const Digraph& g, Vertex s) {
    return sweep(g, s, [&](Vertex v) { return g.out_neighbors(v); });
}

std::vector<bool> coreachable_set(const Digraph& g, Vertex t) {
    return sweep(g, t, [&](Vertex v) { return g.in_neighbors(v); });
}

std::optional<std::string> path_defect(const Digraph& g, const Path& p) {
    if (p.vertices.empty()) return "empty path";
    std::vector<bool> seen(g.num_vertices(), false);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        Vertex v = p.vertices[i];
        if (!g.contains(v)) return "vertex " + std::to_string(v) + " out of range";
        if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
        seen[v] = true;
        if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) {
            return "non-edge (" + std::to_string(p.vertices[i - 1]) + "," + std::to_string(v) + ")";
        }
    }
    return std::nullopt;
}

CongestionProfile congestion_profile(const Digraph& g, std::span<const Path> paths) {
    CongestionProfile profile{std::vector<std::uint32_t>(g.num_vertices(), 0)};
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (auto defect = path_defect(g, paths[i])) {
            throw InvalidInput("path " + std::to_string(i) + ": " + *defect);
        }
        for (Vertex v : paths[i].vertices) ++profile.counts[v];
    }
    return profile;
}

RoutingVerdict check_routing(const Instance& inst, const RoutingWitness& w) {
    using Kind = RoutingVerdict::Kind;
    if (w.paths.size() != inst.demands.size()) {
        throw InvalidInput("witness has " + std::to_string(w.paths.size()) + " paths but instance has " +
                           std::to_string(inst.demands.size()) + " demands");
    }
    for (std::size_t i = 0; i < w.paths.size(); ++i) {
        const Path& p = w.paths[i];
        if (auto defect = path_defect(inst.graph, p)) {
            return {Kind::invalid_path, i, "path " + std::to_string(i) + ": " + *defect};
        }
        const Demand& d = inst.demands[i];
        if (p.front() != d.source || p.back() != d.target) {
            return {Kind::wrong_endpoint, i,
                    "path " + std::to_string(i) + " endpoint mismatch: links " + std::to_string(p.front()) +
                        " to " + std::to_string(p.back()) + ", demand is (" + std::to_string(d.source) + "," +
                        std::to_string(d.target) + ")"};
        }
    }
    CongestionProfile profile = congestion_profile(inst.graph, w.paths);
    for (Vertex v = 0; v < profile.counts.size(); ++v) {
        if (profile.counts[v] > inst.congestion) {
            return {Kind::over_congested, v,
                    "vertex " + std::to_string(v) + " exceeds c: congestion " + std::to_string(profile.counts[v]) +
                        " > " + std::to_string(inst.congestion)};
        }
    }
    return {Kind::accepted, 0, "accepted"};
}

}  // namespace kcr
