#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library beyond the Graph container.

#include <gadgetforge/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using gadgetforge::Edge;
using gadgetforge::Graph;
using gadgetforge::Vertex;

struct Best {
    std::uint64_t value = 0;
    std::vector<Vertex> set;
    bool found = false;
};

// Adjacency matrix plus recursive enumeration of k-subsets in lexicographic
// order; the first maximizer seen is the lexicographically smallest one.
inline auto densest(const Graph &g, std::size_t k) -> Best
{
    const auto n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges())
        adj[u][v] = adj[v][u] = 1;
    Best best;
    std::vector<Vertex> cur;
    auto rec = [&](auto &&self, Vertex next, std::uint64_t value) -> void {
        if (cur.size() == k) {
            if (!best.found || value > best.value) {
                best = {value, cur, true};
            }
            return;
        }
        for (Vertex v = next; v + (k - cur.size()) <= n; ++v) {
            std::uint64_t add = 0;
            for (auto u : cur)
                add += adj[u][v];
            cur.push_back(v);
            self(self, v + 1, value + add);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return best;
}

inline auto induced(const Graph &g, const std::vector<Vertex> &set) -> std::uint64_t
{
    std::set<Vertex> in(set.begin(), set.end());
    std::uint64_t count = 0;
    for (auto [u, v] : g.edges())
        if (in.count(u) && in.count(v))
            ++count;
    return count;
}

// The fence gadget read off its drawing, with 1-based names v1..v8.
inline auto fence_edges_named() -> std::vector<std::pair<int, int>>
{
    return {{1, 2}, {1, 7}, {1, 6}, {2, 7}, {2, 3}, {3, 8}, {3, 4},
            {4, 5}, {4, 8}, {5, 6}, {5, 8}, {6, 7}, {7, 8}};
}

// Torus reduction written directly from the coordinate description: torus
// T_v is an n^2 x n^2 wraparound grid, and base edge {u, v} joins T_v at
// (psi(u), sigma(u)) to T_u at (psi(v), sigma(v)), where
// psi(x) = x n sqrt(n) mod n^2 and sigma(x) = floor(x n sqrt(n) / n^2).
inline auto torus_reduction(const Graph &base, std::uint64_t n, std::uint64_t root) -> Graph
{
    const std::uint64_t side = n * n;
    const std::uint64_t block = side * side;
    auto id = [&](std::uint64_t t, std::uint64_t r, std::uint64_t c) {
        return static_cast<Vertex>(t * block + (r % side) * side + (c % side));
    };
    std::vector<Edge> edges;
    for (std::uint64_t t = 0; t < n; ++t)
        for (std::uint64_t r = 0; r < side; ++r)
            for (std::uint64_t c = 0; c < side; ++c) {
                edges.push_back({id(t, r, c), id(t, r, c + 1)});
                edges.push_back({id(t, r, c), id(t, r + 1, c)});
            }
    auto psi = [&](std::uint64_t x) { return x * n * root % side; };
    auto sigma = [&](std::uint64_t x) { return x * n * root / side; };
    for (auto [u, v] : base.edges())
        edges.push_back({id(v, psi(u), sigma(u)), id(u, psi(v), sigma(v))});
    for (auto &e : edges)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    return Graph::from_edges(static_cast<std::size_t>(n * block), edges);
}

// Cut edges of a side x side grid (optionally with wraparound) for a cell set
// given as a bitmask, by walking the explicit edge list.
inline auto grid_cut(std::uint64_t side, std::uint64_t mask, bool wrap) -> std::uint64_t
{
    auto in = [&](std::uint64_t r, std::uint64_t c) { return (mask >> (r * side + c)) & 1; };
    std::uint64_t cut = 0;
    for (std::uint64_t r = 0; r < side; ++r)
        for (std::uint64_t c = 0; c < side; ++c) {
            if (c + 1 < side || wrap)
                cut += in(r, c) != in(r, (c + 1) % side);
            if (r + 1 < side || wrap)
                cut += in(r, c) != in((r + 1) % side, c);
        }
    return cut;
}

} // namespace oracle
