#pragma once

#include <gadgetforge/graph.hpp>
#include <gadgetforge/reduction.hpp>
#include <gadgetforge/solver.hpp>

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gadgetforge {

// status is "pass", "fail" or "skipped".
struct VerifyReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    std::string status;
    std::vector<nlohmann::json> witnesses;

    auto passed() const -> bool { return status == "pass"; }
    auto to_json() const -> nlohmann::json;
};

struct GridCutOptions {
    // Exhaustive up to N^2 = 25 cells unless sampling is forced.
    bool force_sampled = false;
    std::uint64_t samples_per_size = 2000;
    std::uint64_t seed = 0xD5C0;
};

// Integer ceiling of 2 min(x, N^2 - x) / (N - 1).
auto grid_cut_bound(std::uint64_t side, std::uint64_t x) -> std::uint64_t;

// Minimum number of cut edges over all x-cell subsets of the side x side
// grid, for every x, checked against grid_cut_bound. side must be odd, >= 3.
auto verify_grid_cut_fact(std::uint64_t side, const GridCutOptions &opts = {}) -> VerifyReport;

// Every subset of the side x side torus cuts at least as many torus edges as
// grid edges, so the grid bound carries over. Exhaustive; side^2 <= 25.
auto verify_torus_dominates_grid(std::uint64_t side) -> VerifyReport;

// For every small torus (at most n^4 - n^3 black vertices) of a torus-level
// instance: intra-torus cut edges versus inter-torus edges incident with its
// black vertices, and whether cut >= 2 * inter. Any vertex set is accepted.
auto verify_cut_vs_intertorus(const Graph &g_star, const ReductionStep &step, std::span<const Vertex> black)
    -> VerifyReport;

struct EquivalenceCase {
    Graph graph;
    std::size_t k = 0;
};

// Exact optimum equality between a base instance and its fence or cycle
// reduction, by exhaustive search on both sides. Instances whose search
// exceeds the budget or enumeration cap are reported as skipped.
auto verify_reduction_equivalence(GadgetKind kind, std::span<const EquivalenceCase> corpus,
                                  const SolverOptions &opts = {}) -> VerifyReport;

// Every coloring of a lone fence gadget, after Property 1 and 2 enforcement,
// satisfies all four claim parts.
auto verify_fence_claim_exhaustive() -> VerifyReport;

} // namespace gadgetforge
