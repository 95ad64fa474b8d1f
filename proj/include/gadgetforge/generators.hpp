#pragma once

#include <gadgetforge/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gadgetforge {

// side x side grid; vertex (i, j) has index i * side + j.
auto gen_grid(std::size_t side) -> Graph;

// side x side torus (grid with wraparound), 4-regular. side < 3 would create
// parallel edges and is rejected.
auto gen_torus(std::size_t side) -> Graph;

// Simple graph with exactly target_m edges and maximum degree <= d_max,
// a pure function of its arguments.
auto gen_random_degree_bounded(std::size_t n, std::size_t d_max, std::size_t target_m, std::uint64_t seed)
    -> Graph;

struct PlantedClique {
    Graph graph;
    std::vector<Vertex> clique;
};

// K_s on a random vertex set plus extra_m random edges outside it. The extra
// edges may create further cliques of size s or larger; only the planted one
// is guaranteed.
auto gen_planted_clique(std::size_t n, std::size_t s, std::size_t extra_m, std::uint64_t seed) -> PlantedClique;

// Small named graphs.
auto complete_graph(std::size_t n) -> Graph;
auto cycle_graph(std::size_t n) -> Graph;
auto path_graph(std::size_t n) -> Graph;

// Every labelled simple graph on n vertices, ordered by the edge bitmask over
// the pairs (0,1), (0,2), ..., (n-2,n-1). n <= 8.
auto all_graphs(std::size_t n) -> std::vector<Graph>;

} // namespace gadgetforge
