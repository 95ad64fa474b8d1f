#include <doctest.h>

#include <gadgetforge/errors.hpp>
#include <gadgetforge/generators.hpp>
#include <gadgetforge/reduction.hpp>
#include <gadgetforge/rng.hpp>
#include <gadgetforge/verify.hpp>

#include "oracles.hpp"

using namespace gadgetforge;

TEST_CASE("grid cut bound")
{
    CHECK(grid_cut_bound(3, 0) == 0);
    CHECK(grid_cut_bound(3, 1) == 1);
    CHECK(grid_cut_bound(3, 4) == 4);
    CHECK(grid_cut_bound(3, 5) == 4);
    CHECK(grid_cut_bound(5, 12) == 6);
    CHECK(grid_cut_bound(5, 25) == 0);
}

TEST_CASE("grid cut minima for side 3 match a direct enumeration")
{
    auto report = verify_grid_cut_fact(3);
    CHECK(report.passed());
    CHECK(report.params["mode"] == "exhaustive");
    REQUIRE(report.witnesses.size() == 10);
    for (std::uint64_t x = 0; x <= 9; ++x) {
        std::uint64_t best = UINT64_MAX;
        for (std::uint64_t mask = 0; mask < 512; ++mask)
            if (static_cast<std::uint64_t>(std::popcount(mask)) == x)
                best = std::min(best, oracle::grid_cut(3, mask, false));
        CHECK(report.witnesses[x]["min_cut"] == best);
    }
    CHECK(report.witnesses[1]["min_cut"] == 2);
    CHECK(report.witnesses[0]["min_cut"] == 0);
}

TEST_CASE("grid cut sampled mode labels itself")
{
    GridCutOptions opts;
    opts.force_sampled = true;
    opts.samples_per_size = 50;
    auto report = verify_grid_cut_fact(7, opts);
    CHECK(report.params["mode"] == "sampled");
    CHECK(report.params["seed"] == 0xD5C0);
    CHECK(report.passed());
    CHECK(report.to_json().dump() == verify_grid_cut_fact(7, opts).to_json().dump());
    CHECK_THROWS_AS(verify_grid_cut_fact(4), InputError);
    CHECK_THROWS_AS(verify_grid_cut_fact(1), InputError);
}

TEST_CASE("torus cuts dominate grid cuts for side 3")
{
    auto report = verify_torus_dominates_grid(3);
    CHECK(report.passed());
    for (std::uint64_t mask = 0; mask < 512; ++mask)
        CHECK(oracle::grid_cut(3, mask, true) >= oracle::grid_cut(3, mask, false));
    CHECK(oracle::grid_cut(3, 1, true) == 4);
    CHECK(oracle::grid_cut(3, 511, true) == 0);
}

TEST_CASE("cut versus inter-torus edges")
{
    auto red = reduce_clique_to_dks5(CliqueInstance{complete_graph(3), 3});
    const auto &g = red.instance.graph;
    const auto &step = red.trace.steps.front();

    std::vector<Vertex> whole;
    for (Vertex x = 0; x < 6561; ++x)
        whole.push_back(x);
    auto full = verify_cut_vs_intertorus(g, step, whole);
    CHECK(full.passed());
    CHECK(full.params["small_tori"] == 8);
    CHECK(full.witnesses.empty());

    Rng rng(4);
    auto picked = rng.sample(6561, 1000);
    std::vector<Vertex> patch(picked.begin(), picked.end());
    auto report = verify_cut_vs_intertorus(g, step, patch);
    REQUIRE(report.witnesses.size() == 1);
    std::uint64_t cut = report.witnesses[0]["cut"];
    CHECK(cut == cut_edge_count(g, patch) - static_cast<std::uint64_t>(report.witnesses[0]["inter_torus"]));
}

TEST_CASE("reduction equivalence on tiny graphs")
{
    std::vector<EquivalenceCase> corpus;
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto &g : all_graphs(n))
            for (std::size_t k = 1; k <= n; ++k)
                corpus.push_back({g, k});
    auto cycle = verify_reduction_equivalence(GadgetKind::cycle, corpus);
    CHECK(cycle.passed());
    CHECK(cycle.params["checked"] == corpus.size());
    std::vector<EquivalenceCase> single{{complete_graph(1), 1}};
    auto fence = verify_reduction_equivalence(GadgetKind::fence, single);
    CHECK(fence.passed());
    CHECK(fence.witnesses[0]["opt_reduced"] == 13);
}

TEST_CASE("equivalence reports skipped instances")
{
    SolverOptions opts;
    opts.enumeration_cap = 10;
    std::vector<EquivalenceCase> corpus{{complete_graph(3), 2}};
    auto report = verify_reduction_equivalence(GadgetKind::cycle, corpus, opts);
    CHECK(report.status == "skipped");
    CHECK(report.witnesses[0]["status"] == "skipped");
}

TEST_CASE("fence claim holds on all colorings")
{
    auto report = verify_fence_claim_exhaustive();
    CHECK(report.passed());
    CHECK(report.witnesses.empty());
}
