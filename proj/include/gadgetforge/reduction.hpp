#pragma once

#include <gadgetforge/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gadgetforge {

enum class GadgetKind { torus, fence, cycle };

auto to_string(GadgetKind kind) -> std::string;
auto gadget_kind_from_string(const std::string &name) -> GadgetKind;

struct ReductionOptions {
    // Refuse to build any graph with more vertices than this.
    std::size_t max_vertices = 1'000'000;
};

// Row offset of the attachment point for a base vertex with phi value phi_v:
// (phi_v * n * sqrt(n)) mod n^2. n must be an odd perfect square.
auto psi(std::uint64_t phi_v, std::uint64_t n) -> std::uint64_t;
// Column of the attachment point: floor(phi_v * n * sqrt(n) / n^2).
auto sigma(std::uint64_t phi_v, std::uint64_t n) -> std::uint64_t;

auto is_odd_square(std::uint64_t n) -> bool;

// Smallest odd perfect square that is >= vertex_count and > s + 1.
auto padded_vertex_count(std::uint64_t vertex_count, std::uint64_t s) -> std::uint64_t;

// One n^2 x n^2 torus per base vertex. Torus v occupies the contiguous index
// block [v * n^4, (v + 1) * n^4) in row-major order.
class TorusLayout {
public:
    TorusLayout(std::uint64_t n, std::vector<std::uint64_t> phi);

    auto n() const -> std::uint64_t { return n_; }
    auto side() const -> std::uint64_t { return n_ * n_; }
    auto torus_size() const -> std::uint64_t { return side() * side(); }
    auto phi() const -> const std::vector<std::uint64_t> & { return phi_; }

    auto vertex_index(std::uint64_t v, std::uint64_t row, std::uint64_t col) const -> Vertex
    {
        return static_cast<Vertex>(v * torus_size() + row * side() + col);
    }

    // Attachment point of base vertex u on any neighboring torus, as a local
    // offset row * side + col with row = psi(phi(u)), col = sigma(phi(u)).
    auto attachment(std::uint64_t u) const -> std::uint64_t;

private:
    std::uint64_t n_;
    std::vector<std::uint64_t> phi_;
};

// External edge of a gadget: base neighbor and the gadget-local vertex that
// carries the edge.
struct Port {
    Vertex neighbor;
    std::uint64_t local;

    auto operator==(const Port &) const -> bool = default;
};

// One reduction step. Base vertex v is replaced by a gadget occupying output
// vertices [v * gadget_size, (v + 1) * gadget_size).
struct ReductionStep {
    GadgetKind kind = GadgetKind::fence;
    std::size_t input_n = 0; // vertex count of the source graph, before padding
    std::size_t base_n = 0;  // number of gadgets (padded count for the torus step)
    std::uint64_t param = 0; // s for the torus step, k otherwise
    std::vector<std::vector<Port>> ports;
    std::optional<TorusLayout> torus;

    auto gadget_size() const -> std::uint64_t;
    auto output_n() const -> std::uint64_t { return base_n * gadget_size(); }
    auto output_k() const -> std::uint64_t { return param * gadget_size(); }
    auto gadget_of(Vertex x) const -> std::size_t { return static_cast<std::size_t>(x / gadget_size()); }
    auto local_of(Vertex x) const -> std::uint64_t { return x % gadget_size(); }
    auto vertex_of(std::size_t gadget, std::uint64_t local) const -> Vertex
    {
        return static_cast<Vertex>(gadget * gadget_size() + local);
    }
    // Edges of one gadget in isolation (13 for fence, 4 for cycle, 2 n^4 for torus).
    auto gadget_edge_count() const -> std::uint64_t;

    // The (padded) source graph, rebuilt from the port lists.
    auto base_graph() const -> Graph;
    // Value added by selecting `gadgets` whole gadgets, beyond the base value.
    auto gadget_bonus(std::uint64_t gadgets) const -> std::uint64_t { return gadgets * gadget_edge_count(); }
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;

    // Throws InputError if consecutive steps do not compose.
    void validate() const;
};

struct TorusReduction {
    DksInstance instance;
    std::uint64_t threshold = 0;
    ReductionTrace trace;
};

struct GadgetReduction {
    DksInstance instance;
    ReductionTrace trace;
};

struct ChainReduction {
    // levels[i] is the output of trace.steps[i].
    std::vector<DksInstance> levels;
    // Decision threshold for each entry of levels.
    std::vector<std::uint64_t> thresholds;
    ReductionTrace trace;
};

auto reduce_clique_to_dks5(const CliqueInstance &inst, const ReductionOptions &opts = {}) -> TorusReduction;
auto reduce_deg5_to_deg4_fence(const DksInstance &inst, const ReductionOptions &opts = {}) -> GadgetReduction;
auto reduce_deg4_to_deg3_cycle(const DksInstance &inst, const ReductionOptions &opts = {}) -> GadgetReduction;

// Clique -> degree 5 -> degree 4 -> degree 3. All output sizes are checked
// against the resource cap before anything is built.
auto reduce_full_chain(const CliqueInstance &inst, const ReductionOptions &opts = {}) -> ChainReduction;

// Degree <= 6 DkS -> degree 4 -> degree 3 (the chain without the torus step).
// thresholds are offsets of base_threshold, the threshold of the input.
auto reduce_degree_chain(const DksInstance &inst, std::uint64_t base_threshold, const ReductionOptions &opts = {})
    -> ChainReduction;

// Maps a gadget-complete solution at the output of trace.steps[level] to the
// input of that step: exactly the base vertices whose gadgets are fully
// selected. Throws PreconditionError naming the first partial gadget.
auto lift_solution(const ReductionTrace &trace, std::size_t level, const Solution &sol) -> Solution;
auto lift_solution(const ReductionStep &step, const Solution &sol) -> Solution;

// Selects every vertex of the gadgets of the given base vertices.
auto expand_solution(const ReductionStep &step, const Graph &g_star, std::span<const Vertex> base_vertices)
    -> Solution;

// Index of the first gadget that is neither fully selected nor empty.
auto first_partial_gadget(const ReductionStep &step, std::span<const Vertex> vertices) -> std::optional<std::size_t>;

} // namespace gadgetforge
