#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kcr/graph.hpp"
#include "kcr/oracle.hpp"

namespace kcr {

/// Role of a vertex of the generated digraph D.
///
/// Every pattern vertex i owns an upper line and a lower line, each with
/// n(h+1)+1 vertices: main vertices at segments j = 0..n, and between main
/// vertices j-1 and j one slot vertex per pattern edge l = 0..h-1.
struct VertexRole {
    enum class Kind : std::uint8_t { upper_main, upper_slot, lower_main, lower_slot, edge_source, edge_sink };

    Kind kind = Kind::upper_main;
    std::uint32_t pattern_vertex = 0;  // lines only
    std::uint32_t segment = 0;         // j; 0..n for main, 1..n for slots
    std::uint32_t edge = 0;            // l; slots and edge terminals

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct DemandRole {
    enum class Kind : std::uint8_t { vertex, blocking_upper, blocking_lower, edge };

    Kind kind = Kind::vertex;
    std::uint32_t index = 0;  // pattern vertex, or pattern edge for edge demands
    std::uint32_t copy = 0;   // 0..c-2 for blocking demands

    friend bool operator==(const DemandRole&, const DemandRole&) = default;
};

/// Routing instance generated from a padded PSI instance, with the
/// bookkeeping needed to convert witnesses in both directions.
struct HardInstance {
    Instance routing;
    std::uint32_t k = 0;  // pattern vertices
    std::uint32_t h = 0;  // pattern edges
    std::uint32_t n = 0;  // padded class size
    std::vector<VertexRole> vertex_roles;
    std::vector<DemandRole> demand_roles;
    /// e_0..e_{h-1}, each as (class_a endpoint, class_b endpoint).
    std::vector<UEdge> edge_order;
    /// The padded PSI instance the construction was generated from.
    PsiInstance psi;

    std::uint32_t line_length() const { return n * (h + 1) + 1; }

    Vertex upper_main(std::uint32_t i, std::uint32_t j) const { return upper_base_[i] + j * (h + 1); }
    Vertex lower_main(std::uint32_t i, std::uint32_t j) const { return lower_base_[i] + j * (h + 1); }
    /// Slot of edge l on segment j (1 <= j <= n).
    Vertex upper_slot(std::uint32_t i, std::uint32_t j, std::uint32_t l) const {
        return upper_base_[i] + (j - 1) * (h + 1) + 1 + l;
    }
    Vertex lower_slot(std::uint32_t i, std::uint32_t j, std::uint32_t l) const {
        return lower_base_[i] + (j - 1) * (h + 1) + 1 + l;
    }
    Vertex edge_source(std::uint32_t l) const { return 2 * k * line_length() + l; }
    Vertex edge_sink(std::uint32_t l) const { return 2 * k * line_length() + h + l; }

    /// Full vertex sequence of the upper / lower line of pattern vertex i.
    Path upper_line(std::uint32_t i) const;
    Path lower_line(std::uint32_t i) const;

private:
    friend HardInstance generate_hard_instance(const PsiInstance&, bool);
    std::vector<Vertex> upper_base_;
    std::vector<Vertex> lower_base_;
};

/// Pads every class to the largest class size by duplicating its last
/// vertex; duplicates inherit all host edges of the vertex they copy.
/// Throws InvalidInput on an empty class.
PsiInstance pad_partition(const PsiInstance& p);

/// Builds the routing instance D. Requires equal class sizes, a bipartite
/// pattern whose class_a is {0..a-1} and class_b is {a..k-1}, and, when
/// strict_regular is set, a 3-regular pattern. Throws InvalidInput naming the
/// violated assumption.
///
/// Vertex layout: upper lines of class_a, lower lines of class_a, upper lines
/// of class_b, lower lines of class_b, edge sources, edge sinks. Demands: k
/// vertex demands, k(c-1) upper blocking, k(c-1) lower blocking, h edge
/// demands.
HardInstance generate_hard_instance(const PsiInstance& p, bool strict_regular = false);

/// Routing of D from an embedding. Throws InvalidInput if `e` is not an
/// embedding of hi.psi.
RoutingWitness embedding_to_routing(const HardInstance& hi, const Embedding& e);

/// Reads the embedding off the vertex-demand paths: pattern vertex i maps to
/// the class member of the first lower main vertex on its path. Throws
/// InvalidInput if the witness is not a congestion-c routing of D, a vertex
/// path strays from its own two lines, or the result is not an embedding.
Embedding routing_to_embedding(const HardInstance& hi, const RoutingWitness& w);

}  // namespace kcr
