#include <doctest.h>

#include <gadgetforge/coloring.hpp>
#include <gadgetforge/generators.hpp>
#include <gadgetforge/reduction.hpp>
#include <gadgetforge/repair.hpp>
#include <gadgetforge/solver.hpp>

#include "oracles.hpp"

using namespace gadgetforge;

namespace {

auto locals_black(std::initializer_list<int> named) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (auto x : named)
        out.push_back(static_cast<Vertex>(x - 1));
    std::sort(out.begin(), out.end());
    return out;
}

auto all_but(std::initializer_list<int> whites) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (int x = 1; x <= 8; ++x)
        if (std::find(whites.begin(), whites.end(), x) == whites.end())
            out.push_back(static_cast<Vertex>(x - 1));
    return out;
}

} // namespace

TEST_CASE("generator corner cases")
{
    CHECK(psi(4, 9) == 27);
    CHECK(sigma(4, 9) == 1);
    auto big = gen_torus(81);
    CHECK(big.vertex_count() == 6561);
    CHECK(big.edge_count() == 13122);
    CHECK(gen_random_degree_bounded(4, 3, 6, 99) == complete_graph(4));
    CHECK(gen_random_degree_bounded(10, 3, 0, 5).edge_count() == 0);
    CHECK(gen_random_degree_bounded(20, 5, 40, 7) == gen_random_degree_bounded(20, 5, 40, 7));
    auto tri = gen_planted_clique(9, 3, 0, 1);
    CHECK(tri.graph.edge_count() == 3);
    auto k4 = gen_planted_clique(6, 4, 0, 2);
    CHECK(k4.graph.edge_count() == 6);
    CHECK(induced_edge_count(k4.graph, k4.clique) == 6);
    CHECK(max_degree(Graph::from_edges(0, {})) == 0);
    CHECK(cut_edge_count(gen_grid(3), std::vector<Vertex>{0}) == 2);
    CHECK(cut_edge_count(gen_torus(3), std::vector<Vertex>{4}) == 4);
}

TEST_CASE("construction arithmetic")
{
    auto empty = reduce_clique_to_dks5(CliqueInstance{Graph::from_edges(3, {}), 2});
    CHECK(empty.instance.graph.edge_count() == 9 * 2 * 6561);
    CHECK(empty.threshold == 2 * 2 * 6561 + 1);

    auto fence = reduce_deg5_to_deg4_fence(DksInstance{complete_graph(4), 2, std::nullopt});
    CHECK(fence.instance.graph.vertex_count() == 32);
    CHECK(fence.instance.graph.edge_count() == 58);
    CHECK(fence.instance.k == 16);

    auto cycle = reduce_deg4_to_deg3_cycle(DksInstance{complete_graph(4), 3, std::nullopt});
    CHECK(cycle.instance.graph.vertex_count() == 16);
    CHECK(cycle.instance.graph.edge_count() == 22);
    CHECK(cycle.instance.k == 12);

    auto base = gen_random_degree_bounded(6, 5, 9, 3);
    auto chain = reduce_degree_chain(DksInstance{base, 2, 5}, 0);
    CHECK(chain.levels.back().k == 64);
    CHECK(chain.levels.back().graph.vertex_count() == 192);
    CHECK(max_degree(chain.levels.back().graph) <= 3);
}

TEST_CASE("lifting value relations")
{
    auto red = reduce_deg5_to_deg4_fence(DksInstance{path_graph(2), 2, std::nullopt});
    const auto &step = red.trace.steps.front();
    std::vector<Vertex> both{0, 1};
    auto sol = expand_solution(step, red.instance.graph, both);
    auto lifted = lift_solution(step, sol);
    CHECK(sol.edge_count - lifted.edge_count == 26);

    auto zero = reduce_deg4_to_deg3_cycle(DksInstance{path_graph(3), 0, std::nullopt});
    auto none = lift_solution(zero.trace.steps.front(), Solution::of(zero.instance.graph, {}));
    CHECK(none.vertices.empty());
}

TEST_CASE("property 1 move on a lone gadget")
{
    auto single = reduce_deg5_to_deg4_fence(DksInstance{complete_graph(1), 1, std::nullopt});
    const auto &step = single.trace.steps.front();
    Coloring c(single.instance.graph, step, locals_black({1, 2, 6, 8}));
    auto before = c.black_edges();
    RepairReport log;
    enforce_property1(c, log);
    CHECK(c.is_black(6));
    CHECK(c.black_count() == 4);
    CHECK(c.black_edges() >= before);
    REQUIRE(log.moves.size() == 1);
    CHECK(log.moves[0].to_black == std::vector<Vertex>{6});

    Coloring fine(single.instance.graph, step, locals_black({1, 2, 3, 7, 8}));
    RepairReport quiet;
    enforce_property1(fine, quiet);
    CHECK(quiet.moves.empty());
}

TEST_CASE("property 2 canonical swaps")
{
    auto single = reduce_deg5_to_deg4_fence(DksInstance{complete_graph(1), 1, std::nullopt});
    const auto &step = single.trace.steps.front();
    const auto &g = single.instance.graph;

    Coloring a(g, step, all_but({1, 2, 4, 5}));
    RepairReport log_a;
    enforce_property2(a, log_a);
    REQUIRE(log_a.moves.size() == 1);
    CHECK(log_a.moves[0].to_black == std::vector<Vertex>{0});
    CHECK(log_a.moves[0].to_white == std::vector<Vertex>{2});
    CHECK(log_a.moves[0].delta >= 0);

    Coloring b(g, step, all_but({2, 3, 5, 6}));
    RepairReport log_b;
    enforce_property2(b, log_b);
    REQUIRE(log_b.moves.size() == 1);
    CHECK(log_b.moves[0].to_black == std::vector<Vertex>{1});
    CHECK(log_b.moves[0].to_white == std::vector<Vertex>{3});

    Coloring connected(g, step, all_but({1, 2, 3}));
    RepairReport log_c;
    enforce_property2(connected, log_c);
    CHECK(log_c.moves.empty());

    Coloring full(g, step, all_but({}));
    CHECK(check_fence_claim(full, 0).holds());
}

TEST_CASE("cycle repair of two half gadgets")
{
    auto red = reduce_deg4_to_deg3_cycle(DksInstance{path_graph(2), 1, std::nullopt});
    const auto &g = red.instance.graph;
    auto sol = Solution::of(g, {0, 2, 4, 6});
    auto out = repair_cycle(g, red.trace.steps.front(), sol);
    CHECK(out.report.violations.empty());
    CHECK(out.solution.edge_count == 4);
    CHECK(out.solution.edge_count - sol.edge_count >= 2);
    CHECK_FALSE(first_partial_gadget(red.trace.steps.front(), out.solution.vertices));
}

TEST_CASE("solver examples")
{
    auto c5 = cycle_graph(5);
    CHECK(solve_bruteforce(DksInstance{c5, 3, std::nullopt}).edge_count == 2);
    CHECK_FALSE(solve_threshold(DksInstance{c5, 3, std::nullopt}, 3));
    CHECK(solve_threshold(DksInstance{complete_graph(4), 3, std::nullopt}, 3));
    CHECK_FALSE(solve_threshold(DksInstance{complete_graph(4), 3, std::nullopt}, 4));

    auto single = reduce_deg5_to_deg4_fence(DksInstance{complete_graph(1), 1, std::nullopt});
    CHECK(solve_bruteforce(single.instance).edge_count == 13);

    auto cyc = reduce_deg4_to_deg3_cycle(DksInstance{complete_graph(4), 3, std::nullopt});
    CHECK(solve_gadget_restricted(cyc.instance.graph, cyc.trace.steps.front(), 12).edge_count == 15);

    auto torus = reduce_clique_to_dks5(CliqueInstance{complete_graph(3), 3});
    auto best = solve_gadget_restricted(torus.instance.graph, torus.trace.steps.front(), 19683);
    CHECK(best.edge_count == 39369);
}

TEST_CASE("optimum is monotone in k and restriction is exact on small instances")
{
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto base = gen_random_degree_bounded(4, 3, 4, seed);
        auto red = reduce_deg4_to_deg3_cycle(DksInstance{base, 1, std::nullopt});
        const auto &g = red.instance.graph;
        std::uint64_t prev = 0;
        for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
            auto v = solve_branch_bound(DksInstance{g, k, std::nullopt}).edge_count;
            CHECK(v >= prev);
            prev = v;
        }
        for (std::size_t k = 1; k <= 4; ++k) {
            auto restricted = solve_gadget_restricted(g, red.trace.steps.front(), 4 * k);
            CHECK(restricted.edge_count == solve_bruteforce(DksInstance{g, 4 * k, std::nullopt}).edge_count);
        }
    }
}
