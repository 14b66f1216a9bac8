#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kcr/graph.hpp"

namespace kcr {

/// Brute-force deciders used as ground truth on small instances. They share
/// nothing with the solvers beyond the graph type and the checker.

/// All simple s-t paths in lexicographic order of their vertex sequences.
/// Throws ResourceExhausted if there are more than `cap`.
std::vector<Path> enumerate_simple_paths(const Digraph& g, Vertex s, Vertex t, std::size_t cap);

struct OracleCaps {
    std::size_t paths_per_demand = 100'000;
    std::size_t combinations = 5'000'000;
};

struct OracleResult {
    std::optional<RoutingWitness> witness;
    /// Partial path choices tried by the search.
    std::size_t combinations_explored = 0;
};

/// Exhaustive search over one path choice per demand with incremental
/// congestion counts. Demands are processed in ascending order of their path
/// count (ties by index); within a demand, paths are tried lexicographically.
/// Throws ResourceExhausted when a cap is exceeded; never answers NO on a cap.
OracleResult brute_force_routing(const Instance& inst, const OracleCaps& caps = {});

/// Undirected simple-or-multi graph edge.
using UEdge = std::pair<std::uint32_t, std::uint32_t>;

/// Partitioned Subgraph Isomorphism input.
struct PsiInstance {
    /// Pattern H on vertices 0..pattern_size-1. Parallel pattern edges are
    /// allowed; each is a separate edge of the hardness construction.
    std::uint32_t pattern_size = 0;
    std::vector<UEdge> pattern_edges;
    std::vector<std::uint32_t> class_a;
    std::vector<std::uint32_t> class_b;
    /// classes[i] lists the host vertices V_i that pattern vertex i may map to.
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<UEdge> host_edges;
    std::uint32_t congestion = 1;

    std::size_t host_size() const;
    /// Structural checks only: ranges, loops, and that the classes partition
    /// 0..host_size-1. Bipartiteness is the generator's concern.
    void validate() const;

    friend bool operator==(const PsiInstance&, const PsiInstance&) = default;
};

/// choice[i] indexes into classes[i].
struct Embedding {
    std::vector<std::size_t> choice;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

bool is_embedding(const PsiInstance& p, const Embedding& e);

/// First valid choice tuple in lexicographic order (choice[0] most
/// significant). Throws ResourceExhausted if the product of class sizes
/// exceeds `cap`.
std::optional<Embedding> brute_force_psi(const PsiInstance& p, std::size_t cap = 1'000'000);

}  // namespace kcr
