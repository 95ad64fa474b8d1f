#pragma once

#include <gadgetforge/graph.hpp>
#include <gadgetforge/reduction.hpp>
#include <gadgetforge/repair.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gadgetforge {

// Vertex ids in files are 1-based, matching the graph format. Gadget-local
// port offsets and phi values are 0-based.

auto trace_to_json(const ReductionTrace &trace) -> nlohmann::json;
auto trace_from_json(const nlohmann::json &doc) -> ReductionTrace;
auto emit_trace(const ReductionTrace &trace) -> std::string;
auto parse_trace(const std::string &text) -> ReductionTrace;

struct SolutionRecord {
    std::uint64_t k = 0;
    std::vector<Vertex> vertices; // 0-based once parsed
    std::uint64_t edge_count = 0;
};

auto solution_to_json(const Solution &sol) -> nlohmann::json;
auto emit_solution(const Solution &sol) -> std::string;
auto parse_solution_record(const std::string &text) -> SolutionRecord;

// Parses and checks the record against g: vertex range, size k, and the
// stored edge count.
auto parse_solution(const std::string &text, const Graph &g) -> Solution;

// Move log with per-move deltas (vertices 1-based) and the violations array.
auto report_to_json(const RepairReport &report) -> nlohmann::json;

} // namespace gadgetforge
