#include "kcr/disjoint_paths.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>
#include <utility>

namespace kcr {

namespace {

constexpr std::uint32_t no_parent = std::numeric_limits<std::uint32_t>::max();

/// Groups non-terminal vertices with identical in- and out-neighbourhoods.
/// Swapping two such vertices is an automorphism fixing every terminal.
std::vector<std::uint32_t> interchangeable_classes(const Digraph& g, const std::vector<bool>& terminal) {
    using Signature = std::pair<std::span<const Vertex>, std::span<const Vertex>>;
    auto less = [](const Signature& a, const Signature& b) {
        auto lex = [](std::span<const Vertex> x, std::span<const Vertex> y) {
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
        };
        if (lex(a.first, b.first)) return true;
        if (lex(b.first, a.first)) return false;
        return lex(a.second, b.second);
    };
    std::map<Signature, std::uint32_t, decltype(less)> ids(less);
    std::vector<std::uint32_t> cls(g.num_vertices());
    std::uint32_t next = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (terminal[v]) {
            cls[v] = next++;
            continue;
        }
        auto [it, inserted] = ids.try_emplace(Signature{g.out_neighbors(v), g.in_neighbors(v)}, next);
        if (inserted) ++next;
        cls[v] = it->second;
    }
    return cls;
}

class StateStore {
public:
    explicit StateStore(std::size_t k, const std::vector<std::uint32_t>& cls)
        : k_(k), cls_(cls), index_(1024, Hash{this}, Equal{this}) {}

    std::span<const Vertex> state(std::uint32_t id) const { return {positions_.data() + id * k_, k_}; }
    std::size_t size() const { return parent_.size(); }
    std::uint32_t parent(std::uint32_t id) const { return parent_[id]; }
    std::uint32_t moved(std::uint32_t id) const { return moved_[id]; }

    /// Stores the candidate unless an equivalent state is already present.
    bool insert(std::span<const Vertex> candidate, std::uint32_t parent, std::uint32_t moved) {
        positions_.insert(positions_.end(), candidate.begin(), candidate.end());
        auto id = static_cast<std::uint32_t>(parent_.size());
        parent_.push_back(parent);
        moved_.push_back(moved);
        if (index_.insert(id).second) return true;
        positions_.resize(positions_.size() - k_);
        parent_.pop_back();
        moved_.pop_back();
        return false;
    }

private:
    struct Hash {
        const StateStore* store;
        std::size_t operator()(std::uint32_t id) const {
            std::size_t h = 1469598103934665603ull;
            for (Vertex v : store->state(id)) {
                h ^= store->cls_[v];
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    struct Equal {
        const StateStore* store;
        bool operator()(std::uint32_t a, std::uint32_t b) const {
            auto x = store->state(a);
            auto y = store->state(b);
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (store->cls_[x[i]] != store->cls_[y[i]]) return false;
            }
            return true;
        }
    };

    std::size_t k_;
    const std::vector<std::uint32_t>& cls_;
    std::vector<Vertex> positions_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> moved_;
    std::unordered_set<std::uint32_t, Hash, Equal> index_;
};

std::size_t saturating_product(const std::vector<std::size_t>& factors) {
    std::size_t result = 1;
    for (std::size_t f : factors) {
        if (f != 0 && result > std::numeric_limits<std::size_t>::max() / f) {
            return std::numeric_limits<std::size_t>::max();
        }
        result *= f;
    }
    return result;
}

}  // namespace

DisjointPathsResult solve_vertex_disjoint(const Digraph& g, std::span<const Demand> demands,
                                          const DisjointPathsOptions& options) {
    const std::size_t n = g.num_vertices();
    const std::size_t k = demands.size();
    const std::vector<Vertex> order = topological_order(g);

    std::vector<bool> terminal(n, false);
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex v : {demands[i].source, demands[i].target}) {
            if (!g.contains(v)) throw InvalidInput("demand " + std::to_string(i) + " endpoint out of range");
            if (terminal[v]) {
                throw InvalidInput("vertex-disjoint solver needs pairwise distinct endpoints; vertex " +
                                   std::to_string(v) + " repeats");
            }
            terminal[v] = true;
        }
    }

    DisjointPathsResult result;
    if (k == 0) {
        result.witness = RoutingWitness{};
        result.state_bound = 1;
        return result;
    }

    std::vector<std::vector<bool>> corridor(k);
    std::vector<std::size_t> corridor_size(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto forward = reachable_set(g, demands[i].source);
        auto backward = coreachable_set(g, demands[i].target);
        corridor[i].resize(n);
        for (Vertex v = 0; v < n; ++v) {
            corridor[i][v] = forward[v] && backward[v];
            corridor_size[i] += corridor[i][v];
        }
    }
    result.state_bound = saturating_product(corridor_size);
    if (std::find(corridor_size.begin(), corridor_size.end(), 0) != corridor_size.end()) {
        return result;
    }

    const std::vector<std::uint32_t> cls = interchangeable_classes(g, terminal);
    // Interchangeable vertices have no edges between them, so the earliest
    // position of a class is a valid rank on the quotient DAG.
    std::vector<std::size_t> rank(n);
    {
        std::vector<std::size_t> class_rank(n, std::numeric_limits<std::size_t>::max());
        for (std::size_t pos = 0; pos < n; ++pos) {
            auto& r = class_rank[cls[order[pos]]];
            r = std::min(r, pos);
        }
        for (Vertex v = 0; v < n; ++v) rank[v] = class_rank[cls[v]];
    }

    StateStore store(k, cls);
    std::vector<Vertex> current(k);
    for (std::size_t i = 0; i < k; ++i) current[i] = demands[i].source;
    store.insert(current, no_parent, 0);

    auto finished = [&](std::span<const Vertex> s, std::size_t i) { return s[i] == demands[i].target; };

    std::optional<std::uint32_t> accepted;
    for (std::uint32_t id = 0; id < store.size() && !accepted; ++id) {
        // Copied: insertions below may reallocate the store.
        const std::vector<Vertex> state(store.state(id).begin(), store.state(id).end());
        std::size_t mover = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (finished(state, i)) continue;
            if (mover == k || rank[state[i]] < rank[state[mover]]) mover = i;
        }
        // Every unfinished token sits in its corridor, so there is always one
        // unless all tokens are home, which is caught at insertion.
        current = state;
        const Vertex from = state[mover];
        for (Vertex next : g.out_neighbors(from)) {
            if (!corridor[mover][next]) continue;
            if (std::find(current.begin(), current.end(), next) != current.end()) continue;
            current[mover] = next;
            if (store.insert(current, id, static_cast<std::uint32_t>(mover))) {
                if (store.size() > options.state_cap) {
                    throw ResourceExhausted("disjoint-paths search exceeded " + std::to_string(options.state_cap) +
                                            " states");
                }
                bool done = true;
                for (std::size_t i = 0; i < k && done; ++i) done = current[i] == demands[i].target;
                if (done) {
                    accepted = static_cast<std::uint32_t>(store.size() - 1);
                    break;
                }
            }
            current[mover] = from;
        }
    }
    result.states_visited = store.size();
    if (!accepted) return result;

    // Walk the trace back to the initial state, collecting each token's moves.
    std::vector<std::vector<Vertex>> reversed(k);
    for (std::uint32_t id = *accepted; store.parent(id) != no_parent; id = store.parent(id)) {
        std::uint32_t token = store.moved(id);
        reversed[token].push_back(store.state(id)[token]);
    }
    RoutingWitness witness;
    witness.paths.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto& vertices = witness.paths[i].vertices;
        vertices.push_back(demands[i].source);
        vertices.insert(vertices.end(), reversed[i].rbegin(), reversed[i].rend());
    }
    result.witness = std::move(witness);
    return result;
}

}  // namespace kcr
