#include <doctest.h>

#include <gadgetforge/coloring.hpp>
#include <gadgetforge/errors.hpp>
#include <gadgetforge/fence_gadget.hpp>
#include <gadgetforge/generators.hpp>
#include <gadgetforge/reduction.hpp>
#include <gadgetforge/repair.hpp>
#include <gadgetforge/rng.hpp>
#include <gadgetforge/solver.hpp>

#include "oracles.hpp"

using namespace gadgetforge;

namespace {

auto random_solution(const Graph &g, std::size_t k, Rng &rng) -> Solution
{
    auto picked = rng.sample(g.vertex_count(), k);
    return Solution::of(g, std::vector<Vertex>(picked.begin(), picked.end()));
}

void check_repaired(const Graph &g, const ReductionStep &step, const Solution &before, const RepairResult &after)
{
    CHECK(after.solution.size() == before.size());
    CHECK(after.solution.edge_count >= before.edge_count);
    CHECK(after.solution.edge_count == oracle::induced(g, after.solution.vertices));
    CHECK_FALSE(first_partial_gadget(step, after.solution.vertices));
    CHECK(after.report.rounds <= step.param);
    CHECK(after.report.violations.empty());
    CHECK(after.report.initial_edges == before.edge_count);
    CHECK(after.report.final_edges == after.solution.edge_count);
    CHECK(static_cast<std::int64_t>(after.report.final_edges - after.report.initial_edges) ==
          after.report.delta_sum());
}

auto lone_fence() -> GadgetReduction { return reduce_deg5_to_deg4_fence(DksInstance{complete_graph(1), 1, std::nullopt}); }

} // namespace

TEST_CASE("property checks on hand-picked colorings")
{
    // v7 white, v8 black, v1 and v2 black, v6 white: v7 sees a single white outer vertex.
    std::uint8_t mask = (1u << 0) | (1u << 1) | (1u << 7) | (1u << 2) | (1u << 3) | (1u << 4);
    CHECK_FALSE(holds_property1(mask));
    CHECK(holds_property1(0xFF));
    CHECK(holds_property1(0));
    // whites v1, v4: two singleton components.
    std::uint8_t split = static_cast<std::uint8_t>(0xFF & ~(1u << 0) & ~(1u << 3));
    CHECK_FALSE(holds_property2(split));
    CHECK(holds_property2(static_cast<std::uint8_t>(0xFF & ~(1u << 0) & ~(1u << 1))));
    CHECK(holds_property2(0x01));
}

TEST_CASE("property enforcement on every coloring of one gadget")
{
    auto single = lone_fence();
    const auto &step = single.trace.steps.front();
    for (unsigned mask = 0; mask < 256; ++mask) {
        std::vector<Vertex> black;
        for (Vertex x = 0; x < 8; ++x)
            if (mask >> x & 1)
                black.push_back(x);
        Coloring c(single.instance.graph, step, black);
        auto before = c.black_edges();
        RepairReport log;
        enforce_property1(c, log);
        enforce_property2(c, log);
        CAPTURE(mask);
        CHECK(log.violations.empty());
        CHECK(c.black_edges() >= before);
        CHECK(c.black_count() == black.size());
        CHECK(holds_property1(c.local_mask(0)));
        CHECK(holds_property2(c.local_mask(0)));
        auto claim = check_fence_claim(c, 0);
        CHECK(claim.holds());
    }
}

TEST_CASE("claim witnesses meet their bounds")
{
    auto single = lone_fence();
    const auto &step = single.trace.steps.front();
    // whites v3, v4, v8
    std::vector<Vertex> black{0, 1, 4, 5, 6};
    Coloring c(single.instance.graph, step, black);
    auto claim = check_fence_claim(c, 0);
    CHECK(claim.white == 3);
    CHECK(claim.nonblack_internal >= 7);
    for (std::uint32_t j = 1; j <= 3; ++j) {
        REQUIRE(claim.part2_witness[j - 1]);
        CHECK(incident_black_edges(c, 0, *claim.part2_witness[j - 1]) <= 2 * j + 1);
    }
    CHECK(assert_fence_claim(c).size() == 1);
}

TEST_CASE("already complete solutions are fixed points")
{
    auto red = reduce_deg5_to_deg4_fence(DksInstance{complete_graph(3), 2, std::nullopt});
    const auto &step = red.trace.steps.front();
    std::vector<Vertex> base{0, 1};
    auto sol = expand_solution(step, red.instance.graph, base);
    auto out = repair_fence(red.instance.graph, step, sol);
    CHECK(out.solution == sol);
    CHECK(out.report.moves.empty());
}

TEST_CASE("fence repair on a triangle reaches the restricted optimum")
{
    auto red = reduce_deg5_to_deg4_fence(DksInstance{complete_graph(3), 1, std::nullopt});
    const auto &g = red.instance.graph;
    const auto &step = red.trace.steps.front();
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto sol = random_solution(g, 8, rng);
        auto out = repair_fence(g, step, sol);
        check_repaired(g, step, sol, out);
        CHECK(out.solution.edge_count == 13);
        auto again = repair_fence(g, step, out.solution);
        CHECK(again.solution == out.solution);
    }
}

TEST_CASE("fence repair on random degree-6 graphs")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto base = gen_random_degree_bounded(12, 6, 25, seed);
        auto red = reduce_deg5_to_deg4_fence(DksInstance{base, 4, 6});
        const auto &g = red.instance.graph;
        const auto &step = red.trace.steps.front();
        Rng rng(seed * 31 + 1);
        for (int trial = 0; trial < 100; ++trial) {
            auto sol = random_solution(g, 32, rng);
            check_repaired(g, step, sol, repair_fence(g, step, sol));
        }
    }
}

TEST_CASE("cycle repair on random degree-4 graphs")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto base = gen_random_degree_bounded(12, 4, 20, seed);
        auto red = reduce_deg4_to_deg3_cycle(DksInstance{base, 5, 4});
        const auto &g = red.instance.graph;
        const auto &step = red.trace.steps.front();
        Rng rng(seed * 7 + 3);
        for (int trial = 0; trial < 100; ++trial) {
            auto sol = random_solution(g, 20, rng);
            check_repaired(g, step, sol, repair_cycle(g, step, sol));
        }
    }
}

TEST_CASE("repair rejects mismatched inputs")
{
    auto red = reduce_deg4_to_deg3_cycle(DksInstance{complete_graph(3), 1, std::nullopt});
    const auto &g = red.instance.graph;
    const auto &step = red.trace.steps.front();
    CHECK_THROWS_AS(repair_cycle(g, step, Solution::of(g, {0, 1, 2})), InputError);
    CHECK_THROWS_AS(repair_fence(g, step, Solution::of(g, {0, 1, 2, 3})), InputError);
}

TEST_CASE("torus repair merges a split torus")
{
    auto red = reduce_clique_to_dks5(CliqueInstance{complete_graph(3), 3});
    const auto &g = red.instance.graph;
    const auto &step = red.trace.steps.front();
    const Vertex block = 6561;
    // tori 1 and 2 complete, torus 0 split between tori 3 and 4
    std::vector<Vertex> black;
    for (Vertex x = 0; x < 2 * block; ++x)
        black.push_back(block + x);
    for (Vertex x = 0; x < block / 2; ++x)
        black.push_back(3 * block + x);
    for (Vertex x = 0; x < block - block / 2; ++x)
        black.push_back(4 * block + x);
    auto sol = Solution::of(g, black);
    auto out = repair_torus(g, step, sol);
    CHECK(out.report.violations.empty());
    CHECK(out.solution.edge_count >= sol.edge_count);
    CHECK(out.report.rounds == 1);
    CHECK_FALSE(first_partial_gadget(step, out.solution.vertices));
    CHECK(lift_solution(step, out.solution).size() == 3);

    auto fixed = repair_torus(g, step, out.solution);
    CHECK(fixed.solution == out.solution);
    CHECK(fixed.report.moves.empty());
}

TEST_CASE("torus repair of nine equal strips passes in strict mode")
{
    auto red = reduce_clique_to_dks5(CliqueInstance{complete_graph(3), 3});
    const auto &g = red.instance.graph;
    const auto &step = red.trace.steps.front();
    // The first 27 rows of every torus: nine small tori, no large one.
    std::vector<Vertex> black;
    for (Vertex t = 0; t < 9; ++t)
        for (Vertex x = 0; x < 2187; ++x)
            black.push_back(t * 6561 + x);
    auto sol = Solution::of(g, black);
    RepairOptions strict;
    strict.strict = true;
    auto out = repair_torus(g, step, sol, strict);
    CHECK(out.solution.edge_count >= sol.edge_count);
    CHECK(lift_solution(step, out.solution).vertices == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("repair of perturbed optimal solutions never loses edges")
{
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Rng rng(seed + 40);
        auto n = static_cast<std::size_t>(rng.between(6, 12));
        auto k = static_cast<std::size_t>(rng.between(2, n - 1));
        for (bool fence : {true, false}) {
            auto base = gen_random_degree_bounded(n, fence ? 6 : 4, std::min(n * (n - 1) / 2, n * (fence ? 3 : 2)), seed);
            DksInstance inst{base, k, std::nullopt};
            auto red = fence ? reduce_deg5_to_deg4_fence(inst) : reduce_deg4_to_deg3_cycle(inst);
            const auto &g = red.instance.graph;
            const auto &step = red.trace.steps.front();
            auto best = expand_solution(step, g, solve_bruteforce(inst).vertices);
            for (int trial = 0; trial < 60; ++trial) {
                std::vector<std::uint8_t> in(g.vertex_count(), 0);
                for (auto v : best.vertices)
                    in[v] = 1;
                auto swaps = rng.between(1, 6);
                for (std::uint64_t s = 0; s < swaps; ++s) {
                    Vertex out_v, in_v;
                    do
                        out_v = static_cast<Vertex>(rng.below(g.vertex_count()));
                    while (!in[out_v]);
                    do
                        in_v = static_cast<Vertex>(rng.below(g.vertex_count()));
                    while (in[in_v]);
                    in[out_v] = 0;
                    in[in_v] = 1;
                }
                std::vector<Vertex> set;
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    if (in[v])
                        set.push_back(v);
                auto sol = Solution::of(g, set);
                auto out = repair(g, step, sol);
                check_repaired(g, step, sol, out);
                CHECK(out.solution.edge_count <= best.edge_count);
            }
        }
    }
}

TEST_CASE("fence repair exercises every completion case")
{
    std::set<std::string> kinds;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        auto n = static_cast<std::size_t>(rng.between(6, 16));
        auto base = gen_random_degree_bounded(n, 6, std::min(n * (n - 1) / 2, n * 3), seed);
        auto red = reduce_deg5_to_deg4_fence(DksInstance{base, static_cast<std::size_t>(rng.between(1, n - 1)), 6});
        const auto &g = red.instance.graph;
        for (int trial = 0; trial < 200; ++trial) {
            auto sol = random_solution(g, red.instance.k, rng);
            for (const auto &m : repair_fence(g, red.trace.steps.front(), sol).report.moves)
                kinds.insert(m.kind);
        }
    }
    for (const char *kind : {"property1", "property2-singleton", "property2-swap", "fence-complete-1",
                             "fence-complete-2-singletons", "fence-complete-2-part2", "fence-complete-3-part2",
                             "fence-complete-3-part4", "fence-complete-4-part3", "fence-complete-4-part4",
                             "fence-complete-5", "fence-complete-6", "fence-complete-7"}) {
        CAPTURE(kind);
        CHECK(kinds.count(kind) == 1);
    }
}

TEST_CASE("four-white case empties one gadget into the other")
{
    auto red = reduce_deg5_to_deg4_fence(DksInstance{path_graph(2), 1, std::nullopt});
    const auto &g = red.instance.graph;
    const auto &step = red.trace.steps.front();
    // v5..v8 black in both gadgets; whites v1..v4 form a path.
    auto sol = Solution::of(g, {4, 5, 6, 7, 12, 13, 14, 15});
    auto out = repair_fence(g, step, sol);
    REQUIRE(out.report.moves.size() == 1);
    const auto &move = out.report.moves.front();
    CHECK(move.kind == "fence-complete-4-part3");
    CHECK(move.gadget == std::optional<std::size_t>{0});
    CHECK(move.delta >= 0);
    CHECK(out.report.violations.empty());
    CHECK(out.solution.vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("one-white case pulls a single donor vertex")
{
    auto red = reduce_deg5_to_deg4_fence(DksInstance{path_graph(3), 2, std::nullopt});
    const auto &g = red.instance.graph;
    const auto &step = red.trace.steps.front();
    // gadget 0 full, gadget 1 missing v1, gadget 2 holds v6 only.
    auto sol = Solution::of(g, {0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 21});
    auto out = repair_fence(g, step, sol);
    CHECK(out.report.violations.empty());
    REQUIRE_FALSE(out.report.moves.empty());
    CHECK(out.report.moves.back().kind == "fence-complete-1");
    CHECK(out.solution.edge_count >= sol.edge_count);
    CHECK(lift_solution(step, out.solution).vertices == std::vector<Vertex>{0, 1});
}
