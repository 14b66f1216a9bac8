#include "doctest.h"
#include "kcr/disjoint_paths.hpp"
#include "kcr/oracle.hpp"
#include "support.hpp"

using namespace kcr;
using kcr::testing::below;

TEST_SUITE("disjoint_paths") {
    TEST_CASE("single demand follows smallest successors") {
        std::vector<Demand> demands{{0, 3}};
        auto r = solve_vertex_disjoint(testing::diamond(), demands);
        REQUIRE(r.witness);
        CHECK(r.witness->paths == std::vector<Path>{{{0, 1, 3}}});
    }

    TEST_CASE("crossing gadget has no disjoint routing") {
        std::vector<Demand> demands{{0, 3}, {1, 4}};
        auto r = solve_vertex_disjoint(testing::crossing(), demands);
        CHECK_FALSE(r.witness);
        // Every pair of paths shares vertex 2: there is exactly one path each.
        CHECK(enumerate_simple_paths(testing::crossing(), 0, 3, 10).size() == 1);
        CHECK(enumerate_simple_paths(testing::crossing(), 1, 4, 10).size() == 1);
    }

    TEST_CASE("no demands") {
        auto r = solve_vertex_disjoint(testing::diamond(), std::vector<Demand>{});
        REQUIRE(r.witness);
        CHECK(r.witness->paths.empty());
    }

    TEST_CASE("preconditions") {
        std::vector<Demand> shared{{0, 3}, {0, 2}};
        CHECK_THROWS_AS(solve_vertex_disjoint(testing::diamond(), shared), InvalidInput);
        std::vector<Demand> loop{{1, 1}};
        CHECK_THROWS_AS(solve_vertex_disjoint(testing::diamond(), loop), InvalidInput);
        std::vector<Demand> one{{0, 1}};
        CHECK_THROWS_AS(solve_vertex_disjoint(build_digraph(2, {{0, 1}, {1, 0}}), one), CyclicGraph);
    }

    TEST_CASE("state cap yields ResourceExhausted, not NO") {
        // Two long parallel ladders force many states.
        std::vector<Edge> edges;
        const Vertex rungs = 12;
        for (Vertex i = 0; i + 1 < rungs; ++i) {
            edges.push_back({2 * i, 2 * i + 2});
            edges.push_back({2 * i + 1, 2 * i + 3});
            edges.push_back({2 * i, 2 * i + 3});
        }
        Digraph g(2 * rungs, edges);
        std::vector<Demand> demands{{0, 2 * rungs - 2}, {1, 2 * rungs - 1}};
        CHECK(solve_vertex_disjoint(g, demands).witness);
        CHECK_THROWS_AS(solve_vertex_disjoint(g, demands, {3}), ResourceExhausted);
    }

    TEST_CASE("interchangeable vertices do not change the answer") {
        // Vertices 2 and 3 are twins between the sources and sinks.
        Digraph g = build_digraph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5}});
        std::vector<Demand> demands{{0, 4}, {1, 5}};
        auto r = solve_vertex_disjoint(g, demands);
        REQUIRE(r.witness);
        CHECK(r.witness->paths == std::vector<Path>{{{0, 2, 4}}, {{1, 3, 5}}});
        CHECK(check_routing(Instance{g, demands, 1}, *r.witness).accepted());
    }

    TEST_CASE("matches the brute-force oracle on random instances") {
        std::mt19937_64 rng(2024);
        int yes = 0;
        for (int trial = 0; trial < 600; ++trial) {
            const auto k = static_cast<std::uint32_t>(1 + below(rng, 3));
            Instance inst = testing::random_distinct_endpoints(rng, 10, 22, k);
            auto fast = solve_vertex_disjoint(inst.graph, inst.demands);
            auto slow = brute_force_routing(inst);
            REQUIRE(fast.witness.has_value() == slow.witness.has_value());
            CHECK(fast.states_visited <= fast.state_bound);
            if (fast.witness) {
                ++yes;
                CHECK(check_routing(inst, *fast.witness).accepted());
            }
        }
        // The corpus must exercise both answers.
        CHECK(yes > 50);
        CHECK(yes < 550);
    }

    TEST_CASE("answer is invariant under relabeling") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 300; ++trial) {
            Instance inst = testing::random_distinct_endpoints(rng, 10, 22, 1 + below(rng, 3));
            Instance moved = testing::permute(inst, testing::random_permutation(rng, inst.graph.num_vertices()));
            CHECK(solve_vertex_disjoint(inst.graph, inst.demands).witness.has_value() ==
                  solve_vertex_disjoint(moved.graph, moved.demands).witness.has_value());
        }
    }

    TEST_CASE("adding an edge never turns YES into NO") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 300; ++trial) {
            Instance inst = testing::random_distinct_endpoints(rng, 10, 18, 1 + below(rng, 3));
            if (!solve_vertex_disjoint(inst.graph, inst.demands).witness) continue;
            auto order = topological_order(inst.graph);
            const auto n = order.size();
            if (n < 2) continue;
            auto a = below(rng, n - 1);
            auto b = a + 1 + below(rng, n - a - 1);
            std::vector<Edge> edges(inst.graph.edges().begin(), inst.graph.edges().end());
            edges.push_back({order[a], order[b]});
            Digraph more(n, edges);
            CHECK(solve_vertex_disjoint(more, inst.demands).witness);
        }
    }
}
