#include <gadgetforge/errors.hpp>
#include <gadgetforge/generators.hpp>
#include <gadgetforge/rng.hpp>

#include <algorithm>
#include <string>
#include <unordered_set>

namespace gadgetforge {

namespace {

auto pair_key(Vertex u, Vertex v) -> std::uint64_t
{
    if (u > v)
        std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
}

auto pair_count(std::size_t n) -> std::uint64_t { return std::uint64_t{n} * (n == 0 ? 0 : n - 1) / 2; }

// Enumerating all pairs is cheaper than rejection sampling up to this size.
constexpr std::uint64_t enumerate_pairs_limit = 4'000'000;

class BoundedBuilder {
public:
    BoundedBuilder(std::size_t n, std::size_t d_max) : degree_(n, 0), d_max_(d_max) {}

    auto try_add(Vertex u, Vertex v) -> bool
    {
        if (u == v || degree_[u] >= d_max_ || degree_[v] >= d_max_ || present_.contains(pair_key(u, v)))
            return false;
        add(u, v);
        return true;
    }

    // Raise the edge count by one through a switch: drop (a, b) and add (u, a),
    // (v, b), where u and v are unsaturated vertices that cannot be joined
    // directly. Returns false when no such switch exists.
    auto switch_in(Rng &rng) -> bool
    {
        std::vector<Vertex> open;
        for (Vertex x = 0; x < degree_.size(); ++x)
            if (degree_[x] < d_max_)
                open.push_back(x);
        for (std::size_t i = 0; i < open.size(); ++i)
            for (std::size_t j = i + 1; j < open.size(); ++j)
                if (try_add(open[i], open[j]))
                    return true;

        std::vector<std::pair<Vertex, Vertex>> endpoints;
        for (std::size_t i = 0; i < open.size(); ++i) {
            if (d_max_ - degree_[open[i]] >= 2)
                endpoints.emplace_back(open[i], open[i]);
            for (std::size_t j = i + 1; j < open.size(); ++j)
                endpoints.emplace_back(open[i], open[j]);
        }
        auto order = edges_;
        rng.shuffle(order);
        for (auto [u, v] : endpoints) {
            for (auto e : order) {
                for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                    if (a == u || b == v || a == v || b == u)
                        continue;
                    if (present_.contains(pair_key(u, a)) || present_.contains(pair_key(v, b)))
                        continue;
                    if (u == v && a == b)
                        continue;
                    remove(a, b);
                    add(u, a);
                    add(v, b);
                    return true;
                }
            }
        }
        return false;
    }

    auto size() const -> std::size_t { return edges_.size(); }
    auto build() const -> Graph { return Graph::from_edges(degree_.size(), edges_); }

private:
    void add(Vertex u, Vertex v)
    {
        present_.insert(pair_key(u, v));
        edges_.push_back({u, v});
        ++degree_[u];
        ++degree_[v];
    }

    void remove(Vertex u, Vertex v)
    {
        present_.erase(pair_key(u, v));
        auto it = std::find_if(edges_.begin(), edges_.end(), [&](Edge e) {
            return pair_key(e.u, e.v) == pair_key(u, v);
        });
        edges_.erase(it);
        --degree_[u];
        --degree_[v];
    }

    std::vector<std::size_t> degree_;
    std::size_t d_max_;
    std::unordered_set<std::uint64_t> present_;
    std::vector<Edge> edges_;
};

} // namespace

auto gen_grid(std::size_t side) -> Graph
{
    if (side < 1)
        throw InputError("grid side must be positive");
    std::vector<Edge> edges;
    auto at = [side](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * side + j); };
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) {
            if (j + 1 < side)
                edges.push_back({at(i, j), at(i, j + 1)});
            if (i + 1 < side)
                edges.push_back({at(i, j), at(i + 1, j)});
        }
    return Graph::from_edges(side * side, edges);
}

auto gen_torus(std::size_t side) -> Graph
{
    if (side < 3)
        throw InputError("torus side must be at least 3 (got " + std::to_string(side) + ")");
    std::vector<Edge> edges;
    auto at = [side](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * side + j); };
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) {
            edges.push_back({at(i, j), at(i, (j + 1) % side)});
            edges.push_back({at(i, j), at((i + 1) % side, j)});
        }
    return Graph::from_edges(side * side, edges);
}

auto gen_random_degree_bounded(std::size_t n, std::size_t d_max, std::size_t target_m, std::uint64_t seed)
    -> Graph
{
    if (target_m > pair_count(n) || target_m > std::uint64_t{n} * d_max / 2)
        throw InputError("cannot place " + std::to_string(target_m) + " edges on " + std::to_string(n) +
                         " vertices with maximum degree " + std::to_string(d_max));

    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        Rng rng(seed + attempt * 0x9E3779B97F4A7C15ULL);
        BoundedBuilder builder(n, d_max);

        if (pair_count(n) <= enumerate_pairs_limit) {
            std::vector<Edge> pairs;
            pairs.reserve(pair_count(n));
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    pairs.push_back({u, v});
            rng.shuffle(pairs);
            for (auto e : pairs) {
                if (builder.size() == target_m)
                    break;
                builder.try_add(e.u, e.v);
            }
        } else {
            std::size_t misses = 0;
            while (builder.size() < target_m && misses < 64 * target_m + 1024) {
                auto u = static_cast<Vertex>(rng.below(n));
                auto v = static_cast<Vertex>(rng.below(n));
                misses = builder.try_add(u, v) ? 0 : misses + 1;
            }
        }

        while (builder.size() < target_m && builder.switch_in(rng)) {
        }
        if (builder.size() == target_m)
            return builder.build();
    }
    throw InternalError("degree-bounded generator failed to reach " + std::to_string(target_m) + " edges");
}

auto gen_planted_clique(std::size_t n, std::size_t s, std::size_t extra_m, std::uint64_t seed) -> PlantedClique
{
    if (s > n)
        throw InputError("planted clique size " + std::to_string(s) + " exceeds n=" + std::to_string(n));
    if (extra_m > pair_count(n) - pair_count(s))
        throw InputError("not enough vertex pairs for " + std::to_string(extra_m) + " extra edges");

    Rng rng(seed);
    PlantedClique out;
    for (auto v : rng.sample(n, s))
        out.clique.push_back(static_cast<Vertex>(v));

    std::unordered_set<std::uint64_t> present;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            edges.push_back({out.clique[i], out.clique[j]});
            present.insert(pair_key(out.clique[i], out.clique[j]));
        }

    if (pair_count(n) <= enumerate_pairs_limit) {
        std::vector<Edge> absent;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!present.contains(pair_key(u, v)))
                    absent.push_back({u, v});
        for (auto idx : rng.sample(absent.size(), extra_m))
            edges.push_back(absent[idx]);
    } else {
        while (edges.size() < pair_count(s) + extra_m) {
            auto u = static_cast<Vertex>(rng.below(n));
            auto v = static_cast<Vertex>(rng.below(n));
            if (u != v && present.insert(pair_key(u, v)).second)
                edges.push_back({u, v});
        }
    }
    out.graph = Graph::from_edges(n, edges);
    return out;
}

auto complete_graph(std::size_t n) -> Graph
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

auto cycle_graph(std::size_t n) -> Graph
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return Graph::from_edges(n, edges);
}

auto path_graph(std::size_t n) -> Graph
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph::from_edges(n, edges);
}

auto all_graphs(std::size_t n) -> std::vector<Graph>
{
    if (n > 8)
        throw InputError("all_graphs supports at most 8 vertices");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(pairs[i]);
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

} // namespace gadgetforge
