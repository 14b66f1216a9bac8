#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kcr/disjoint_paths.hpp"
#include "kcr/graph.hpp"

namespace kcr {

/// Where a product vertex comes from.
struct ProductOrigin {
    enum class Kind : std::uint8_t { copy, source, sink };

    Kind kind = Kind::copy;
    /// Original vertex for copies, demand index for fresh terminals.
    std::uint32_t index = 0;
    /// Layer 0..c-1 for copies; unused for terminals.
    std::uint32_t layer = 0;
};

/// Layered product reducing congestion-c routing to vertex-disjoint paths.
///
/// Vertex numbering: copy (v, layer) is layer * n + v; fresh source of demand
/// i is c * n + i; fresh sink of demand i is c * n + k + i. Every original
/// edge (u, v) yields c^2 edges ((u, a), (v, b)); fresh source i feeds all c
/// copies of s_i and all copies of t_i feed fresh sink i.
struct ProductInstance {
    Digraph graph;
    std::vector<Demand> demands;
    std::vector<ProductOrigin> origin;
    std::size_t original_vertices = 0;
    std::uint32_t layers = 0;

    Vertex copy(Vertex v, std::uint32_t layer) const {
        return static_cast<Vertex>(layer * original_vertices + v);
    }
    Vertex fresh_source(std::size_t i) const {
        return static_cast<Vertex>(layers * original_vertices + i);
    }
    Vertex fresh_sink(std::size_t i) const {
        return static_cast<Vertex>(layers * original_vertices + demands.size() + i);
    }
};

ProductInstance build_product(const Digraph& g, std::span<const Demand> demands, std::uint32_t congestion);

/// Maps a vertex-disjoint product witness back to a congestion-c routing of
/// the original demands. Throws InvalidInput if the product witness is not
/// a valid disjoint routing of the product demands.
RoutingWitness project_witness(const ProductInstance& p, const RoutingWitness& product_witness);

struct CongestionOptions {
    std::size_t state_cap = DisjointPathsOptions{}.state_cap;
};

struct CongestionResult {
    std::optional<RoutingWitness> witness;
    std::size_t states_visited = 0;
};

/// Exact (k, c)-congestion routing on an acyclic digraph through the product
/// construction. Returns NO without searching if some demand is unroutable
/// on its own.
CongestionResult solve_congestion(const Digraph& g, std::span<const Demand> demands, std::uint32_t congestion,
                                  const CongestionOptions& options = {});

/// Breadth-first path with smallest-index tie-breaking. Throws Unreachable.
Path fallback_path(const Digraph& g, const Demand& d);

struct HighCongestionOptions {
    std::size_t state_cap = DisjointPathsOptions{}.state_cap;
    /// Threads for the subset scan; 0 means the OpenMP default.
    int jobs = 1;
    /// Report the lexicographically first successful subset even when
    /// checking subsets concurrently.
    bool deterministic = true;
};

struct HighCongestionResult {
    enum class Branch { unroutable, trivial, direct, subsets };

    std::optional<RoutingWitness> witness;
    Branch branch = Branch::unroutable;
    std::size_t states_visited = 0;
    /// Subsets checked; in deterministic mode the number a sequential scan
    /// would have checked.
    std::size_t subsets_tried = 0;
    /// Demand indices of the successful subset, if the subset branch said YES.
    std::vector<std::size_t> chosen_subset;
};

/// Decides (k, k-d)-congestion routing on an acyclic digraph by reducing to
/// subsets of 3d demands that admit a 2d-routing; demands outside the chosen
/// subset are routed on fallback paths. Requires 0 <= d < k (or d = 0 when
/// k = 0); throws InvalidInput otherwise.
///
/// Subsets are scanned concurrently with OpenMP when options.jobs != 1.
HighCongestionResult solve_high_congestion(const Digraph& g, std::span<const Demand> demands, std::size_t offset,
                                           const HighCongestionOptions& options = {});

/// Sequential reference for solve_high_congestion: scans subsets in
/// lexicographic order and stops at the first success.
HighCongestionResult solve_high_congestion_serial(const Digraph& g, std::span<const Demand> demands,
                                                  std::size_t offset, const HighCongestionOptions& options = {});

/// All size-r subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t n, std::size_t r);

}  // namespace kcr
