#include "kcr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kcr {

std::vector<Path> enumerate_simple_paths(const Digraph& g, Vertex s, Vertex t, std::size_t cap) {
    if (!g.contains(s) || !g.contains(t)) throw InvalidInput("path endpoint out of range");
    std::vector<Path> out;
    std::vector<bool> on_path(g.num_vertices(), false);
    Path current;

    auto extend = [&](auto&& self, Vertex v) -> void {
        current.vertices.push_back(v);
        on_path[v] = true;
        if (v == t) {
            if (out.size() == cap) {
                throw ResourceExhausted("more than " + std::to_string(cap) + " simple paths from " +
                                        std::to_string(s) + " to " + std::to_string(t));
            }
            out.push_back(current);
        } else {
            for (Vertex w : g.out_neighbors(v)) {
                if (!on_path[w]) self(self, w);
            }
        }
        on_path[v] = false;
        current.vertices.pop_back();
    };
    extend(extend, s);
    return out;
}

OracleResult brute_force_routing(const Instance& inst, const OracleCaps& caps) {
    inst.validate();
    const std::size_t k = inst.demands.size();
    std::vector<std::vector<Path>> options(k);
    for (std::size_t i = 0; i < k; ++i) {
        options[i] = enumerate_simple_paths(inst.graph, inst.demands[i].source, inst.demands[i].target,
                                            caps.paths_per_demand);
    }

    OracleResult result;
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return options[a].size() < options[b].size(); });
    if (k > 0 && options[order.front()].empty()) return result;

    std::vector<std::uint32_t> load(inst.graph.num_vertices(), 0);
    std::vector<std::size_t> picked(k);

    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == k) return true;
        const std::size_t demand = order[depth];
        for (std::size_t choice = 0; choice < options[demand].size(); ++choice) {
            if (++result.combinations_explored > caps.combinations) {
                throw ResourceExhausted("oracle explored more than " + std::to_string(caps.combinations) +
                                        " path combinations");
            }
            const Path& p = options[demand][choice];
            bool fits = true;
            for (Vertex v : p.vertices) fits = fits && load[v] < inst.congestion;
            if (!fits) continue;
            for (Vertex v : p.vertices) ++load[v];
            picked[demand] = choice;
            if (self(self, depth + 1)) return true;
            for (Vertex v : p.vertices) --load[v];
        }
        return false;
    };
    if (search(search, 0)) {
        RoutingWitness w;
        for (std::size_t i = 0; i < k; ++i) w.paths.push_back(options[i][picked[i]]);
        result.witness = std::move(w);
    }
    return result;
}

std::size_t PsiInstance::host_size() const {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    return total;
}

void PsiInstance::validate() const {
    if (congestion == 0) throw InvalidInput("congestion must be at least 1");
    if (classes.size() != pattern_size) {
        throw InvalidInput("need one host class per pattern vertex: " + std::to_string(classes.size()) + " classes, " +
                           std::to_string(pattern_size) + " pattern vertices");
    }
    for (const auto& [u, v] : pattern_edges) {
        if (u >= pattern_size || v >= pattern_size) throw InvalidInput("pattern edge endpoint out of range");
        if (u == v) throw InvalidInput("pattern loop at vertex " + std::to_string(u));
    }
    for (const auto* side : {&class_a, &class_b}) {
        for (auto u : *side) {
            if (u >= pattern_size) throw InvalidInput("bipartition lists an out-of-range pattern vertex");
        }
    }
    const std::size_t n = host_size();
    std::vector<bool> seen(n, false);
    for (const auto& c : classes) {
        for (auto v : c) {
            if (v >= n) throw InvalidInput("host vertex " + std::to_string(v) + " out of range");
            if (seen[v]) throw InvalidInput("host vertex " + std::to_string(v) + " lies in two classes");
            seen[v] = true;
        }
    }
    for (const auto& [u, v] : host_edges) {
        if (u >= n || v >= n) throw InvalidInput("host edge endpoint out of range");
        if (u == v) throw InvalidInput("host loop at vertex " + std::to_string(u));
    }
}

namespace {

std::set<UEdge> adjacency(const std::vector<UEdge>& edges) {
    std::set<UEdge> adj;
    for (auto [u, v] : edges) {
        adj.emplace(u, v);
        adj.emplace(v, u);
    }
    return adj;
}

}  // namespace

bool is_embedding(const PsiInstance& p, const Embedding& e) {
    if (e.choice.size() != p.pattern_size) return false;
    for (std::size_t i = 0; i < e.choice.size(); ++i) {
        if (e.choice[i] >= p.classes[i].size()) return false;
    }
    const auto adj = adjacency(p.host_edges);
    for (auto [u, v] : p.pattern_edges) {
        if (!adj.contains({p.classes[u][e.choice[u]], p.classes[v][e.choice[v]]})) return false;
    }
    return true;
}

std::optional<Embedding> brute_force_psi(const PsiInstance& p, std::size_t cap) {
    p.validate();
    std::size_t tuples = 1;
    for (const auto& c : p.classes) {
        if (c.empty()) return std::nullopt;
        if (tuples > cap / c.size()) {
            throw ResourceExhausted("more than " + std::to_string(cap) + " embedding tuples");
        }
        tuples *= c.size();
    }
    const auto adj = adjacency(p.host_edges);
    const std::size_t k = p.pattern_size;
    Embedding e{std::vector<std::size_t>(k, 0)};

    // Pattern edges checkable once both endpoints are fixed, i.e. by the
    // larger endpoint index.
    std::vector<std::vector<std::uint32_t>> earlier(k);
    for (auto [u, v] : p.pattern_edges) {
        earlier[std::max(u, v)].push_back(std::min(u, v));
    }

    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == k) return true;
        for (std::size_t z = 0; z < p.classes[i].size(); ++z) {
            bool ok = true;
            for (auto j : earlier[i]) {
                ok = ok && adj.contains({p.classes[i][z], p.classes[j][e.choice[j]]});
            }
            if (!ok) continue;
            e.choice[i] = z;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    if (search(search, 0)) return e;
    return std::nullopt;
}

}  // namespace kcr
