#pragma once

#include <gadgetforge/coloring.hpp>
#include <gadgetforge/graph.hpp>
#include <gadgetforge/reduction.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gadgetforge {

struct RepairOptions {
    // Throw ClaimViolation on the first failed assertion instead of recording
    // it and continuing with the best available move.
    bool strict = false;
};

struct RepairMove {
    std::string kind;
    std::optional<std::size_t> gadget; // gadget the move targets, if any
    std::vector<Vertex> to_white;
    std::vector<Vertex> to_black;
    std::int64_t delta = 0; // change in black edges
};

struct Violation {
    std::string check;
    std::optional<std::size_t> gadget;
    std::string detail;
};

struct RepairReport {
    std::vector<RepairMove> moves;
    std::uint64_t initial_edges = 0;
    std::uint64_t final_edges = 0;
    // Moves that increased the number of fully selected gadgets.
    std::size_t rounds = 0;
    std::vector<Violation> violations;

    auto delta_sum() const -> std::int64_t;
};

struct RepairResult {
    Solution solution;
    RepairReport report;
};

// Each repair takes a solution of size output_k() of `step` on the reduced
// graph and returns a gadget-complete solution of the same size that induces
// at least as many edges (any shortfall is reported as a violation).
auto repair_cycle(const Graph &g_star, const ReductionStep &step, const Solution &sol, const RepairOptions &opts = {})
    -> RepairResult;
auto repair_fence(const Graph &g_star, const ReductionStep &step, const Solution &sol, const RepairOptions &opts = {})
    -> RepairResult;
auto repair_torus(const Graph &g_star, const ReductionStep &step, const Solution &sol, const RepairOptions &opts = {})
    -> RepairResult;

// Dispatches on step.kind.
auto repair(const Graph &g_star, const ReductionStep &step, const Solution &sol, const RepairOptions &opts = {})
    -> RepairResult;

// Fence gadget canonicalization steps. They recolor within single gadgets
// only, so per-gadget black counts never change.
//
// Property 1: no white inner vertex has at most one white outer neighbor
// while the other inner vertex is black.
// Property 2: in gadgets with at most four white vertices the white vertices
// induce a connected subgraph.
auto holds_property1(std::uint8_t black_mask) -> bool;
auto holds_property2(std::uint8_t black_mask) -> bool;

void enforce_property1(Coloring &coloring, RepairReport &report, const RepairOptions &opts = {});
void enforce_property2(Coloring &coloring, RepairReport &report, const RepairOptions &opts = {});

// Claim witnesses for one fence gadget, as gadget-local indices (v1 = 0).
struct FenceClaim {
    std::size_t gadget = 0;
    std::uint32_t white = 0;
    std::uint32_t nonblack_internal = 0;
    // Part 1: exactly i in {1,2,3} white => at least 2i+1 non-black internal edges.
    bool part1_applies = false;
    // Part 2: for j = 1..3 with >= j black and >= j white, a j-set of black
    // vertices incident with at most 2j+1 black edges (internal or external).
    std::array<bool, 3> part2_applies{};
    std::array<std::optional<std::vector<std::uint32_t>>, 3> part2_witness;
    // Part 3: exactly four white => >= 8 non-black internal edges and the four
    // black vertices are incident with at most 8 black edges.
    bool part3_applies = false;
    std::optional<std::vector<std::uint32_t>> part3_witness;
    // Part 4: 1..3 black => a black vertex of black degree at most 2.
    bool part4_applies = false;
    std::optional<std::uint32_t> part4_witness;

    std::vector<std::string> failures;
    auto holds() const -> bool { return failures.empty(); }
};

// Black edges with at least one endpoint among the given local vertices.
auto incident_black_edges(const Coloring &coloring, std::size_t gadget, std::span<const std::uint32_t> locals)
    -> std::uint32_t;

auto check_fence_claim(const Coloring &coloring, std::size_t gadget) -> FenceClaim;

// Checks every gadget; throws ClaimViolation naming the first failing gadget
// and its coloring.
auto assert_fence_claim(const Coloring &coloring) -> std::vector<FenceClaim>;

} // namespace gadgetforge
