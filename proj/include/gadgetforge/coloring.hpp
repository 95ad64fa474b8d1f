#pragma once

#include <gadgetforge/graph.hpp>
#include <gadgetforge/reduction.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace gadgetforge {

// Black/white coloring of a reduced graph (black = in the solution), with
// per-vertex black degrees, per-gadget black counts and the number of black
// edges maintained incrementally under recoloring.
class Coloring {
public:
    Coloring(const Graph &g, const ReductionStep &step, std::span<const Vertex> black);

    auto graph() const -> const Graph & { return *graph_; }
    auto step() const -> const ReductionStep & { return *step_; }

    auto is_black(Vertex v) const -> bool { return black_[v] != 0; }
    auto black_degree(Vertex v) const -> std::uint32_t { return black_degree_[v]; }
    auto black_edges() const -> std::uint64_t { return black_edges_; }
    auto black_count() const -> std::uint64_t { return black_count_; }

    auto gadget_count() const -> std::size_t { return gadget_black_.size(); }
    auto gadget_black(std::size_t gadget) const -> std::uint64_t { return gadget_black_[gadget]; }
    auto gadget_white(std::size_t gadget) const -> std::uint64_t
    {
        return step_->gadget_size() - gadget_black_[gadget];
    }
    auto is_complete(std::size_t gadget) const -> bool
    {
        return gadget_black_[gadget] == 0 || gadget_black_[gadget] == step_->gadget_size();
    }
    auto is_gadget_complete() const -> bool;
    auto incomplete_gadgets() const -> std::vector<std::size_t>;
    auto full_gadgets() const -> std::size_t;

    // Bit x set iff local vertex x of the gadget is black. Gadgets of at most
    // 8 vertices only.
    auto local_mask(std::size_t gadget) const -> std::uint8_t;

    void set_black(Vertex v);
    void set_white(Vertex v);

    auto black_vertices() const -> std::vector<Vertex>;
    auto to_solution() const -> Solution;

private:
    const Graph *graph_;
    const ReductionStep *step_;
    std::vector<std::uint8_t> black_;
    std::vector<std::uint32_t> black_degree_;
    std::vector<std::uint64_t> gadget_black_;
    std::uint64_t black_edges_ = 0;
    std::uint64_t black_count_ = 0;
};

} // namespace gadgetforge
