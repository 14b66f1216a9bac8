#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcr/error.hpp"

namespace kcr {

using Vertex = std::uint32_t;

struct Edge {
    Vertex tail;
    Vertex head;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed graph over dense vertex indices 0..n-1.
///
/// The edge list is kept verbatim (parallel edges included). The adjacency
/// lists are sorted ascending and collapse parallel edges, since routing is
/// indifferent to edge multiplicity.
class Digraph {
public:
    Digraph() = default;

    /// Throws InvalidInput on an out-of-range endpoint or a loop.
    Digraph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return out_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }

    bool contains(Vertex v) const { return v < num_vertices(); }
    bool has_edge(Vertex tail, Vertex head) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.edges_ == b.edges_ && a.out_.size() == b.out_.size();
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

struct Demand {
    Vertex source;
    Vertex target;

    friend bool operator==(const Demand&, const Demand&) = default;
    friend auto operator<=>(const Demand&, const Demand&) = default;
};

/// A routing problem: route every demand with vertex congestion at most
/// `congestion`. The demand list is a multiset; order matters for witnesses.
struct Instance {
    Digraph graph;
    std::vector<Demand> demands;
    std::uint32_t congestion = 1;

    /// Throws InvalidInput if congestion is zero or a demand endpoint is
    /// out of range.
    void validate() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// A simple path given by its vertex sequence. A single vertex is a
/// zero-length path.
struct Path {
    std::vector<Vertex> vertices;

    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    std::size_t size() const { return vertices.size(); }

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// One path per demand, index-aligned with the instance's demand list.
struct RoutingWitness {
    std::vector<Path> paths;

    friend bool operator==(const RoutingWitness&, const RoutingWitness&) = default;
};

struct CongestionProfile {
    std::vector<std::uint32_t> counts;

    std::uint32_t max() const;
};

// Throws InvalidInput (out-of-range endpoint or loop).
Digraph build_digraph(std::size_t num_vertices, std::vector<Edge> edges);

/// Kahn's algorithm with a min-heap: among available vertices the smallest
/// index is emitted first. Throws CyclicGraph.
std::vector<Vertex> topological_order(const Digraph& g);

bool is_acyclic(const Digraph& g);

/// Vertices reachable from `s` (including `s`), as a membership mask.
std::vector<bool> reachable_set(const Digraph& g, Vertex s);

/// Vertices that can reach `t` (including `t`), as a membership mask.
std::vector<bool> coreachable_set(const Digraph& g, Vertex t);

/// Returns a description of the first defect, or nullopt for a valid simple
/// path of `g`.
std::optional<std::string> path_defect(const Digraph& g, const Path& p);

/// counts[v] = number of paths containing v. Throws InvalidInput if some path
/// is not a simple path of `g`.
CongestionProfile congestion_profile(const Digraph& g, std::span<const Path> paths);

struct RoutingVerdict {
    enum class Kind { accepted, invalid_path, wrong_endpoint, over_congested };

    Kind kind = Kind::accepted;
    /// Failing path index (invalid_path, wrong_endpoint) or vertex
    /// (over_congested).
    std::size_t where = 0;
    std::string message;

    bool accepted() const { return kind == Kind::accepted; }
};

/// Per-path checks run first, in path order; then the smallest over-congested
/// vertex is reported. Throws InvalidInput on a witness/demand length mismatch.
RoutingVerdict check_routing(const Instance& inst, const RoutingWitness& w);

}  // namespace kcr
