#pragma once

#include <gadgetforge/graph.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace gadgetforge {

// DIMACS-style edge format:
//
//   c optional comment lines
//   p edge <n> <m>
//   e <u> <v>        (exactly m lines, 1 <= u, v <= n)
//
// Errors carry the 1-based line number of the offending line.
auto parse_graph(std::string_view text) -> Graph;

// Canonical form: header then edges with u < v in lexicographic order.
auto emit_graph(const Graph &g) -> std::string;

auto read_graph_file(const std::filesystem::path &path) -> Graph;
void write_graph_file(const std::filesystem::path &path, const Graph &g);

auto read_text_file(const std::filesystem::path &path) -> std::string;
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace gadgetforge
