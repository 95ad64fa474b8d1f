#include <gadgetforge/errors.hpp>
#include <gadgetforge/graph.hpp>

#include <algorithm>
#include <string>

namespace gadgetforge {

namespace {

auto membership(const Graph &g, std::span<const Vertex> s) -> std::vector<char>
{
    std::vector<char> in(g.vertex_count(), 0);
    for (auto v : s) {
        if (v >= g.vertex_count())
            throw InputError("vertex " + std::to_string(v) + " out of range (graph has " +
                             std::to_string(g.vertex_count()) + " vertices)");
        if (in[v])
            throw InputError("vertex " + std::to_string(v) + " listed twice");
        in[v] = 1;
    }
    return in;
}

} // namespace

auto Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) -> Graph
{
    std::vector<Edge> canonical;
    canonical.reserve(edges.size());
    for (const auto &e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint out of range");
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        canonical.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(canonical.begin(), canonical.end());
    if (auto dup = std::adjacent_find(canonical.begin(), canonical.end()); dup != canonical.end())
        throw InputError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

    Graph g;
    g.offsets_.assign(vertex_count + 1, 0);
    for (const auto &e : canonical) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < vertex_count; ++i)
        g.offsets_[i + 1] += g.offsets_[i];

    g.adjacency_.resize(canonical.size() * 2);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto &e : canonical) {
        g.adjacency_[fill[e.u]++] = e.v;
        g.adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t x = 0; x < vertex_count; ++x)
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[x]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[x + 1]));
    return g;
}

auto Graph::has_edge(Vertex u, Vertex v) const -> bool
{
    if (u >= vertex_count() || v >= vertex_count())
        return false;
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (auto v : neighbors(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

void CliqueInstance::validate() const
{
    if (s < 1 || s > graph.vertex_count())
        throw InputError("clique size s=" + std::to_string(s) + " must lie in 1.." +
                         std::to_string(graph.vertex_count()));
}

void DksInstance::validate() const
{
    if (k > graph.vertex_count())
        throw InputError("k=" + std::to_string(k) + " exceeds vertex count " +
                         std::to_string(graph.vertex_count()));
    if (degree_bound) {
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            if (graph.degree(v) > *degree_bound)
                throw InputError("vertex " + std::to_string(v + 1) + " has degree " +
                                 std::to_string(graph.degree(v)) + " above the declared bound " +
                                 std::to_string(*degree_bound));
    }
}

auto Solution::of(const Graph &g, std::vector<Vertex> vertices) -> Solution
{
    std::sort(vertices.begin(), vertices.end());
    Solution sol;
    sol.edge_count = induced_edge_count(g, vertices);
    sol.vertices = std::move(vertices);
    return sol;
}

auto induced_edge_count(const Graph &g, std::span<const Vertex> s) -> std::uint64_t
{
    auto in = membership(g, s);
    std::uint64_t count = 0;
    for (auto u : s)
        for (auto v : g.neighbors(u))
            if (u < v && in[v])
                ++count;
    return count;
}

auto cut_edge_count(const Graph &g, std::span<const Vertex> s) -> std::uint64_t
{
    auto in = membership(g, s);
    std::uint64_t count = 0;
    for (auto u : s)
        for (auto v : g.neighbors(u))
            if (!in[v])
                ++count;
    return count;
}

auto max_degree(const Graph &g) -> std::size_t
{
    std::size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

auto complement(const Graph &g, std::span<const Vertex> s) -> std::vector<Vertex>
{
    auto in = membership(g, s);
    std::vector<Vertex> out;
    out.reserve(g.vertex_count() - s.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!in[v])
            out.push_back(v);
    return out;
}

auto is_connected(const Graph &g) -> bool
{
    const auto n = g.vertex_count();
    if (n == 0)
        return true;
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

} // namespace gadgetforge
