#include <gadgetforge/coloring.hpp>
#include <gadgetforge/errors.hpp>

#include <algorithm>
#include <string>

namespace gadgetforge {

Coloring::Coloring(const Graph &g, const ReductionStep &step, std::span<const Vertex> black)
    : graph_(&g), step_(&step), black_(g.vertex_count(), 0), black_degree_(g.vertex_count(), 0),
      gadget_black_(step.base_n, 0)
{
    if (g.vertex_count() != step.output_n())
        throw InputError("graph has " + std::to_string(g.vertex_count()) + " vertices but the trace step produces " +
                         std::to_string(step.output_n()));
    for (auto v : black) {
        if (v >= g.vertex_count())
            throw InputError("solution vertex " + std::to_string(v + 1) + " out of range");
        if (black_[v])
            throw InputError("solution vertex " + std::to_string(v + 1) + " listed twice");
        set_black(v);
    }
}

void Coloring::set_black(Vertex v)
{
    if (black_[v])
        throw InternalError("vertex " + std::to_string(v) + " is already black");
    black_[v] = 1;
    black_edges_ += black_degree_[v];
    for (auto u : graph_->neighbors(v))
        ++black_degree_[u];
    ++gadget_black_[step_->gadget_of(v)];
    ++black_count_;
}

void Coloring::set_white(Vertex v)
{
    if (!black_[v])
        throw InternalError("vertex " + std::to_string(v) + " is already white");
    black_[v] = 0;
    black_edges_ -= black_degree_[v];
    for (auto u : graph_->neighbors(v))
        --black_degree_[u];
    --gadget_black_[step_->gadget_of(v)];
    --black_count_;
}

auto Coloring::is_gadget_complete() const -> bool
{
    for (std::size_t g = 0; g < gadget_count(); ++g)
        if (!is_complete(g))
            return false;
    return true;
}

auto Coloring::incomplete_gadgets() const -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < gadget_count(); ++g)
        if (!is_complete(g))
            out.push_back(g);
    return out;
}

auto Coloring::full_gadgets() const -> std::size_t
{
    return static_cast<std::size_t>(std::count(gadget_black_.begin(), gadget_black_.end(), step_->gadget_size()));
}

auto Coloring::local_mask(std::size_t gadget) const -> std::uint8_t
{
    std::uint8_t mask = 0;
    for (std::uint64_t x = 0; x < std::min<std::uint64_t>(step_->gadget_size(), 8); ++x)
        if (black_[step_->vertex_of(gadget, x)])
            mask |= static_cast<std::uint8_t>(1u << x);
    return mask;
}

auto Coloring::black_vertices() const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    out.reserve(black_count_);
    for (Vertex v = 0; v < black_.size(); ++v)
        if (black_[v])
            out.push_back(v);
    return out;
}

auto Coloring::to_solution() const -> Solution
{
    Solution sol;
    sol.vertices = black_vertices();
    sol.edge_count = black_edges_;
    return sol;
}

} // namespace gadgetforge
