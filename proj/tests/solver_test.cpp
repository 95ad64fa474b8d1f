#include <doctest.h>

#include <gadgetforge/errors.hpp>
#include <gadgetforge/generators.hpp>
#include <gadgetforge/reduction.hpp>
#include <gadgetforge/rng.hpp>
#include <gadgetforge/solver.hpp>

#include "oracles.hpp"

using namespace gadgetforge;

TEST_CASE("binomial saturates")
{
    CHECK(binomial(24, 12) == 2704156);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("small known optima")
{
    auto k4 = complete_graph(4);
    for (auto kind : {SolverKind::brute, SolverKind::branch_bound}) {
        auto sol = solve(DksInstance{k4, 3, std::nullopt}, kind);
        CHECK(sol.edge_count == 3);
        CHECK(sol.vertices == std::vector<Vertex>{0, 1, 2});
        CHECK(solve(DksInstance{cycle_graph(6), 3, std::nullopt}, kind).edge_count == 2);
        CHECK(solve(DksInstance{k4, 0, std::nullopt}, kind).vertices.empty());
        CHECK(solve(DksInstance{path_graph(5), 5, std::nullopt}, kind).edge_count == 4);
    }
}

TEST_CASE("both solvers agree with the enumeration oracle")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        auto n = static_cast<std::size_t>(rng.between(1, 11));
        auto max_m = n * (n - 1) / 2;
        auto g = gen_random_degree_bounded(n, n, static_cast<std::size_t>(rng.between(0, max_m)), seed);
        for (std::size_t k = 0; k <= n; ++k) {
            auto expected = oracle::densest(g, k);
            DksInstance inst{g, k, std::nullopt};
            auto brute = solve_bruteforce(inst);
            auto bb = solve_branch_bound(inst);
            CHECK(brute.edge_count == expected.value);
            CHECK(brute.vertices == expected.set);
            CHECK(bb == brute);
        }
    }
}

TEST_CASE("threshold search")
{
    auto g = gen_planted_clique(14, 5, 10, 3).graph;
    DksInstance inst{g, 5, std::nullopt};
    for (auto kind : {SolverKind::brute, SolverKind::branch_bound}) {
        auto hit = solve_threshold(inst, 10, kind);
        REQUIRE(hit);
        CHECK(hit->edge_count >= 10);
        CHECK_FALSE(solve_threshold(inst, 11 + g.edge_count(), kind));
    }
}

TEST_CASE("brute force enumeration cap")
{
    SolverOptions opts;
    opts.enumeration_cap = 100;
    CHECK_THROWS_AS(solve_bruteforce(DksInstance{complete_graph(12), 6, std::nullopt}, opts), ResourceError);
}

TEST_CASE("branch and bound honours its budget")
{
    SolverOptions opts;
    opts.budget = std::chrono::milliseconds(0);
    auto g = gen_random_degree_bounded(90, 6, 200, 1);
    CHECK_THROWS_AS(solve_branch_bound(DksInstance{g, 40, std::nullopt}, opts), TimeoutError);
}

TEST_CASE("gadget-restricted optimum equals the base optimum plus the gadget bonus")
{
    auto base = complete_graph(3);
    auto red = reduce_deg5_to_deg4_fence(DksInstance{base, 2, std::nullopt});
    const auto &step = red.trace.steps.front();
    auto sol = solve_gadget_restricted(red.instance.graph, step, 16);
    CHECK(sol.edge_count == 26 + 1);
    CHECK_THROWS_AS(solve_gadget_restricted(red.instance.graph, step, 15), InputError);
}

TEST_CASE("solver names")
{
    CHECK(solver_kind_from_string("bb") == SolverKind::branch_bound);
    CHECK(solver_kind_from_string("brute") == SolverKind::brute);
    CHECK_THROWS_AS(solver_kind_from_string("greedy"), InputError);
}
