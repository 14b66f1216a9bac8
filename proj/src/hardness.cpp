#include "kcr/hardness.hpp"

#include <algorithm>
#include <set>

namespace kcr {

Path HardInstance::upper_line(std::uint32_t i) const {
    Path p;
    for (std::uint32_t pos = 0; pos < line_length(); ++pos) p.vertices.push_back(upper_base_[i] + pos);
    return p;
}

Path HardInstance::lower_line(std::uint32_t i) const {
    Path p;
    for (std::uint32_t pos = 0; pos < line_length(); ++pos) p.vertices.push_back(lower_base_[i] + pos);
    return p;
}

PsiInstance pad_partition(const PsiInstance& p) {
    p.validate();
    std::size_t target = 0;
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        if (p.classes[i].empty()) throw InvalidInput("host class " + std::to_string(i) + " is empty");
        target = std::max(target, p.classes[i].size());
    }
    PsiInstance out = p;
    auto next = static_cast<std::uint32_t>(out.host_size());
    for (auto& cls : out.classes) {
        const std::uint32_t original = cls.back();
        std::vector<std::uint32_t> neighbours;
        for (auto [u, v] : out.host_edges) {
            if (u == original) neighbours.push_back(v);
            if (v == original) neighbours.push_back(u);
        }
        while (cls.size() < target) {
            const std::uint32_t copy = next++;
            cls.push_back(copy);
            for (auto w : neighbours) out.host_edges.emplace_back(copy, w);
        }
    }
    return out;
}

HardInstance generate_hard_instance(const PsiInstance& p, bool strict_regular) {
    p.validate();
    const std::uint32_t k = p.pattern_size;
    if (k == 0) throw InvalidInput("pattern has no vertices");
    const std::size_t n = p.classes.front().size();
    for (const auto& cls : p.classes) {
        if (cls.size() != n) throw InvalidInput("host classes differ in size; pad the partition first");
    }
    if (n == 0) throw InvalidInput("host classes are empty");

    const auto split = static_cast<std::uint32_t>(p.class_a.size());
    {
        std::vector<std::uint32_t> a = p.class_a;
        std::vector<std::uint32_t> b = p.class_b;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        bool ordered = a.size() + b.size() == k;
        for (std::uint32_t u = 0; ordered && u < split; ++u) ordered = a[u] == u;
        for (std::uint32_t u = 0; ordered && u < b.size(); ++u) ordered = b[u] == split + u;
        if (!ordered) {
            throw InvalidInput("pattern classes must be class_a = {0..a-1} and class_b = {a..k-1}");
        }
    }
    std::vector<UEdge> order;
    std::vector<std::uint32_t> degree(k, 0);
    for (auto [u, v] : p.pattern_edges) {
        auto lo = std::min(u, v);
        auto hi = std::max(u, v);
        if (!(lo < split && hi >= split)) {
            throw InvalidInput("pattern is not bipartite: edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} lies inside one class");
        }
        order.emplace_back(lo, hi);
        ++degree[u];
        ++degree[v];
    }
    if (strict_regular) {
        for (std::uint32_t u = 0; u < k; ++u) {
            if (degree[u] != 3) {
                throw InvalidInput("pattern is not 3-regular: vertex " + std::to_string(u) + " has degree " +
                                   std::to_string(degree[u]));
            }
        }
    }
    std::sort(order.begin(), order.end());

    HardInstance hi;
    hi.k = k;
    hi.h = static_cast<std::uint32_t>(order.size());
    hi.n = static_cast<std::uint32_t>(n);
    hi.edge_order = order;
    hi.psi = p;
    const std::uint32_t h = hi.h;
    const std::uint32_t len = hi.line_length();
    const std::uint32_t c = p.congestion;

    hi.upper_base_.resize(k);
    hi.lower_base_.resize(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        if (i < split) {
            hi.upper_base_[i] = i * len;
            hi.lower_base_[i] = (split + i) * len;
        } else {
            hi.upper_base_[i] = (2 * split + (i - split)) * len;
            hi.lower_base_[i] = (2 * split + (k - split) + (i - split)) * len;
        }
    }

    const std::size_t total = 2 * static_cast<std::size_t>(k) * len + 2 * h;
    hi.vertex_roles.resize(total);
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j <= n; ++j) {
            hi.vertex_roles[hi.upper_main(i, j)] = {VertexRole::Kind::upper_main, i, j, 0};
            hi.vertex_roles[hi.lower_main(i, j)] = {VertexRole::Kind::lower_main, i, j, 0};
            if (j == 0) continue;
            for (std::uint32_t l = 0; l < h; ++l) {
                hi.vertex_roles[hi.upper_slot(i, j, l)] = {VertexRole::Kind::upper_slot, i, j, l};
                hi.vertex_roles[hi.lower_slot(i, j, l)] = {VertexRole::Kind::lower_slot, i, j, l};
            }
        }
    }
    for (std::uint32_t l = 0; l < h; ++l) {
        hi.vertex_roles[hi.edge_source(l)] = {VertexRole::Kind::edge_source, 0, 0, l};
        hi.vertex_roles[hi.edge_sink(l)] = {VertexRole::Kind::edge_sink, 0, 0, l};
    }

    std::vector<Edge> edges;
    // Lines, in layout order.
    for (Vertex base = 0; base < 2 * k * len; base += len) {
        for (Vertex pos = 0; pos + 1 < len; ++pos) edges.push_back({base + pos, base + pos + 1});
    }
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 1; j <= n; ++j) edges.push_back({hi.upper_main(i, j - 1), hi.lower_main(i, j)});
    }
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 1; j <= n; ++j) {
            for (std::uint32_t l = 0; l < h; ++l) edges.push_back({hi.upper_slot(i, j, l), hi.lower_slot(i, j, l)});
        }
    }
    std::set<UEdge> host;
    for (auto [u, v] : p.host_edges) {
        host.emplace(u, v);
        host.emplace(v, u);
    }
    for (std::uint32_t l = 0; l < h; ++l) {
        const auto [ia, ib] = order[l];
        for (std::uint32_t ja = 1; ja <= n; ++ja) {
            for (std::uint32_t jb = 1; jb <= n; ++jb) {
                if (!host.contains({p.classes[ia][ja - 1], p.classes[ib][jb - 1]})) continue;
                edges.push_back({hi.edge_source(l), hi.upper_slot(ia, ja, l)});
                edges.push_back({hi.lower_slot(ia, ja, l), hi.upper_slot(ib, jb, l)});
                edges.push_back({hi.lower_slot(ib, jb, l), hi.edge_sink(l)});
            }
        }
    }

    std::vector<Demand> demands;
    std::vector<DemandRole> roles;
    for (std::uint32_t i = 0; i < k; ++i) {
        demands.push_back({hi.upper_main(i, 0), hi.lower_main(i, hi.n)});
        roles.push_back({DemandRole::Kind::vertex, i, 0});
    }
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t r = 0; r + 1 < c; ++r) {
            demands.push_back({hi.upper_main(i, 0), hi.upper_main(i, hi.n)});
            roles.push_back({DemandRole::Kind::blocking_upper, i, r});
        }
    }
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t r = 0; r + 1 < c; ++r) {
            demands.push_back({hi.lower_main(i, 0), hi.lower_main(i, hi.n)});
            roles.push_back({DemandRole::Kind::blocking_lower, i, r});
        }
    }
    for (std::uint32_t l = 0; l < h; ++l) {
        demands.push_back({hi.edge_source(l), hi.edge_sink(l)});
        roles.push_back({DemandRole::Kind::edge, l, 0});
    }

    hi.routing = Instance{Digraph(total, std::move(edges)), std::move(demands), c};
    hi.demand_roles = std::move(roles);
    return hi;
}

RoutingWitness embedding_to_routing(const HardInstance& hi, const Embedding& e) {
    if (!is_embedding(hi.psi, e)) throw InvalidInput("not an embedding of the pattern into the host");
    std::vector<std::uint32_t> z(hi.k);
    for (std::uint32_t i = 0; i < hi.k; ++i) z[i] = static_cast<std::uint32_t>(e.choice[i]) + 1;

    RoutingWitness w;
    w.paths.reserve(hi.demand_roles.size());
    for (const DemandRole& role : hi.demand_roles) {
        Path p;
        switch (role.kind) {
            case DemandRole::Kind::vertex: {
                const std::uint32_t i = role.index;
                for (Vertex v = hi.upper_main(i, 0); v <= hi.upper_main(i, z[i] - 1); ++v) p.vertices.push_back(v);
                for (Vertex v = hi.lower_main(i, z[i]); v <= hi.lower_main(i, hi.n); ++v) p.vertices.push_back(v);
                break;
            }
            case DemandRole::Kind::blocking_upper:
                p = hi.upper_line(role.index);
                break;
            case DemandRole::Kind::blocking_lower:
                p = hi.lower_line(role.index);
                break;
            case DemandRole::Kind::edge: {
                const std::uint32_t l = role.index;
                const auto [ia, ib] = hi.edge_order[l];
                p.vertices = {hi.edge_source(l),           hi.upper_slot(ia, z[ia], l), hi.lower_slot(ia, z[ia], l),
                              hi.upper_slot(ib, z[ib], l), hi.lower_slot(ib, z[ib], l), hi.edge_sink(l)};
                break;
            }
        }
        w.paths.push_back(std::move(p));
    }
    return w;
}

Embedding routing_to_embedding(const HardInstance& hi, const RoutingWitness& w) {
    RoutingVerdict verdict = check_routing(hi.routing, w);
    if (!verdict.accepted()) throw InvalidInput("witness rejected: " + verdict.message);

    Embedding e{std::vector<std::size_t>(hi.k)};
    for (std::size_t d = 0; d < hi.demand_roles.size(); ++d) {
        const DemandRole& role = hi.demand_roles[d];
        if (role.kind != DemandRole::Kind::vertex) continue;
        const std::uint32_t i = role.index;
        std::uint32_t first = hi.n + 1;
        for (Vertex v : w.paths[d].vertices) {
            const VertexRole& r = hi.vertex_roles[v];
            const bool own_line = r.kind != VertexRole::Kind::edge_source && r.kind != VertexRole::Kind::edge_sink &&
                                  r.pattern_vertex == i;
            if (!own_line) {
                throw InvalidInput("vertex-demand path " + std::to_string(i) + " leaves its own lines at vertex " +
                                   std::to_string(v));
            }
            if (r.kind == VertexRole::Kind::lower_main && r.segment >= 1) first = std::min(first, r.segment);
        }
        if (first > hi.n) throw InvalidInput("vertex-demand path " + std::to_string(i) + " never enters its lower line");
        e.choice[i] = first - 1;
    }
    if (!is_embedding(hi.psi, e)) throw InvalidInput("extracted mapping is not an embedding");
    return e;
}

}  // namespace kcr
