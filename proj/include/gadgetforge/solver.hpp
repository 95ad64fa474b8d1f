#pragma once

#include <gadgetforge/graph.hpp>
#include <gadgetforge/reduction.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace gadgetforge {

enum class SolverKind { brute, branch_bound };

auto solver_kind_from_string(const std::string &name) -> SolverKind;

struct SolverOptions {
    // Brute force refuses instances with more than this many k-subsets.
    std::uint64_t enumeration_cap = 1'000'000'000;
    std::chrono::milliseconds budget{60'000};
};

// Saturates at UINT64_MAX.
auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;

// Exhaustive search. Returns a maximizer; among maximizers, the
// lexicographically smallest sorted vertex list.
auto solve_bruteforce(const DksInstance &inst, const SolverOptions &opts = {}) -> Solution;

// Depth-first include/exclude search with the degree bound. Same result and
// tie-break as solve_bruteforce; throws TimeoutError past the budget.
auto solve_branch_bound(const DksInstance &inst, const SolverOptions &opts = {}) -> Solution;

auto solve(const DksInstance &inst, SolverKind kind, const SolverOptions &opts = {}) -> Solution;

// Some solution with at least `threshold` induced edges, or nullopt if none
// exists. Stops at the first witness.
auto solve_threshold(const DksInstance &inst, std::uint64_t threshold, SolverKind kind = SolverKind::branch_bound,
                     const SolverOptions &opts = {}) -> std::optional<Solution>;

// Best solution among those made of whole gadgets of `step`, found by solving
// the base instance and expanding the chosen base vertices.
auto solve_gadget_restricted(const Graph &g_star, const ReductionStep &step, std::uint64_t k_prime,
                             SolverKind kind = SolverKind::branch_bound, const SolverOptions &opts = {})
    -> Solution;

} // namespace gadgetforge
