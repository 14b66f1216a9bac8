#pragma once

#include <cstdint>
#include <random>

#include "kcr/graph.hpp"

namespace kcr {

/// Uniform integer in [0, bound). Avoids std::uniform_int_distribution,
/// whose output differs between standard libraries, so seeded corpora are
/// byte-reproducible everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct RandomInstanceParams {
    std::uint32_t vertices = 1;
    std::uint32_t edges = 0;
    std::uint32_t demands = 0;
    std::uint32_t congestion = 1;
    /// Draw each target among the vertices reachable from its source, so
    /// every demand is routable on its own.
    bool routable_demands = false;
};

/// Random DAG: a random vertex permutation with `edges` distinct forward
/// pairs drawn uniformly, plus random demand endpoints. Edges are
/// listed sorted. Throws InvalidInput if edges > n(n-1)/2 or n == 0.
Instance random_instance(const RandomInstanceParams& params, std::uint64_t seed);

}  // namespace kcr
