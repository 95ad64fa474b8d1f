#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gadgetforge {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge &) const = default;
};

// Immutable undirected simple graph on vertices 0..n-1, stored as sorted
// adjacency lists in compressed (CSR) form.
class Graph {
public:
    Graph() = default;

    // Validates the edge list: endpoints in range, no self-loops, no duplicates
    // (in either orientation). Throws InputError otherwise.
    static auto from_edges(std::size_t vertex_count, std::span<const Edge> edges) -> Graph;

    auto vertex_count() const -> std::size_t { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    auto edge_count() const -> std::size_t { return adjacency_.size() / 2; }

    auto neighbors(Vertex v) const -> std::span<const Vertex>
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    auto degree(Vertex v) const -> std::size_t { return offsets_[v + 1] - offsets_[v]; }
    auto has_edge(Vertex u, Vertex v) const -> bool;

    // Canonical edge list: u < v, sorted lexicographically.
    auto edges() const -> std::vector<Edge>;

    auto operator==(const Graph &) const -> bool = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

struct CliqueInstance {
    Graph graph;
    std::size_t s = 0;

    // Throws InputError unless 1 <= s <= vertex_count.
    void validate() const;
};

struct DksInstance {
    Graph graph;
    std::size_t k = 0;
    std::optional<std::size_t> degree_bound;

    // Throws InputError if k exceeds the vertex count or a degree exceeds the
    // declared bound.
    void validate() const;
};

// A vertex set together with its induced edge count. Always constructed
// against a graph so edge_count cannot drift from the vertex set.
struct Solution {
    std::vector<Vertex> vertices;
    std::uint64_t edge_count = 0;

    static auto of(const Graph &g, std::vector<Vertex> vertices) -> Solution;

    auto size() const -> std::size_t { return vertices.size(); }
    auto operator==(const Solution &) const -> bool = default;
};

auto induced_edge_count(const Graph &g, std::span<const Vertex> s) -> std::uint64_t;

// Number of edges with exactly one endpoint in s.
auto cut_edge_count(const Graph &g, std::span<const Vertex> s) -> std::uint64_t;

auto max_degree(const Graph &g) -> std::size_t;
auto is_connected(const Graph &g) -> bool;

auto complement(const Graph &g, std::span<const Vertex> s) -> std::vector<Vertex>;

} // namespace gadgetforge
