#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "kcr/graph.hpp"

namespace kcr {

struct DisjointPathsOptions {
    /// Maximum number of distinct token states stored before giving up with
    /// ResourceExhausted.
    std::size_t state_cap = 100'000'000;
};

struct DisjointPathsResult {
    std::optional<RoutingWitness> witness;
    std::size_t states_visited = 0;
    /// Product of corridor sizes, saturating; states_visited never exceeds it.
    std::size_t state_bound = 0;
};

/// Decides whether k pairwise vertex-disjoint paths exist in an acyclic
/// digraph, path i linking demands[i].source to demands[i].target.
///
/// Tokens walk from their sources to their targets. In every state only the
/// unfinished token lying earliest in a fixed topological order may move, and
/// it may only step onto an unoccupied vertex of its corridor (vertices on
/// some source-to-target path of that token). The state graph is explored
/// breadth-first, successors in ascending vertex order.
///
/// States that differ only by swapping interchangeable vertices (same in- and
/// out-neighbourhood, not a terminal) are visited once. This is what keeps
/// layered product graphs tractable.
///
/// Requires all 2k endpoints to be pairwise distinct. Throws CyclicGraph,
/// InvalidInput, or ResourceExhausted.
DisjointPathsResult solve_vertex_disjoint(const Digraph& g, std::span<const Demand> demands,
                                          const DisjointPathsOptions& options = {});

}  // namespace kcr
