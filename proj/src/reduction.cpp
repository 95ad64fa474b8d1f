#include <gadgetforge/errors.hpp>
#include <gadgetforge/fence_gadget.hpp>
#include <gadgetforge/reduction.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace gadgetforge {

namespace {

auto isqrt(std::uint64_t n) -> std::uint64_t
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

void check_cap(std::uint64_t vertices, const ReductionOptions &opts, const std::string &what)
{
    if (vertices > opts.max_vertices)
        throw ResourceError(what + " would have " + std::to_string(vertices) +
                            " vertices, above the cap of " + std::to_string(opts.max_vertices) +
                            " (raise --max-vertices to override)");
}

// Fifth power with saturation, so the cap check cannot overflow.
auto saturating_pow5(std::uint64_t n) -> std::uint64_t
{
    std::uint64_t out = 1;
    for (int i = 0; i < 5; ++i) {
        if (n != 0 && out > UINT64_MAX / n)
            return UINT64_MAX;
        out *= n;
    }
    return out;
}

auto ports_in_neighbor_order(const Graph &g) -> std::vector<std::vector<Port>>
{
    std::vector<std::vector<Port>> ports(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t next = 0;
        for (auto u : g.neighbors(v))
            ports[v].push_back({u, next++});
    }
    return ports;
}

auto port_for(const std::vector<Port> &ports, Vertex neighbor) -> std::uint64_t
{
    auto it = std::find_if(ports.begin(), ports.end(), [&](const Port &p) { return p.neighbor == neighbor; });
    if (it == ports.end())
        throw InternalError("missing port for neighbor " + std::to_string(neighbor));
    return it->local;
}

// Shared body of the fence and cycle reductions.
auto replace_vertices(const DksInstance &inst, GadgetKind kind, std::size_t max_input_degree,
                      std::size_t output_bound, const ReductionOptions &opts) -> GadgetReduction
{
    inst.validate();
    const auto &g = inst.graph;
    if (auto d = max_degree(g); d > max_input_degree)
        throw InputError(to_string(kind) + " reduction needs maximum degree <= " + std::to_string(max_input_degree) +
                         ", input has " + std::to_string(d));

    ReductionStep step;
    step.kind = kind;
    step.input_n = g.vertex_count();
    step.base_n = g.vertex_count();
    step.param = inst.k;
    step.ports = ports_in_neighbor_order(g);
    check_cap(step.output_n(), opts, to_string(kind) + " reduction output");

    std::vector<Edge> edges;
    edges.reserve(g.vertex_count() * step.gadget_edge_count() + g.edge_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (kind == GadgetKind::fence) {
            for (auto [a, b] : fence::edges)
                edges.push_back({step.vertex_of(v, a), step.vertex_of(v, b)});
        } else {
            for (std::uint64_t c = 0; c < 4; ++c)
                edges.push_back({step.vertex_of(v, c), step.vertex_of(v, (c + 1) % 4)});
        }
    }
    for (auto e : g.edges())
        edges.push_back({step.vertex_of(e.u, port_for(step.ports[e.u], e.v)),
                         step.vertex_of(e.v, port_for(step.ports[e.v], e.u))});

    GadgetReduction out;
    out.instance.graph = Graph::from_edges(step.output_n(), edges);
    out.instance.k = step.output_k();
    out.instance.degree_bound = output_bound;
    out.trace.steps.push_back(std::move(step));
    return out;
}

} // namespace

auto to_string(GadgetKind kind) -> std::string
{
    switch (kind) {
    case GadgetKind::torus:
        return "torus";
    case GadgetKind::fence:
        return "fence";
    case GadgetKind::cycle:
        return "cycle";
    }
    return "unknown";
}

auto gadget_kind_from_string(const std::string &name) -> GadgetKind
{
    if (name == "torus")
        return GadgetKind::torus;
    if (name == "fence")
        return GadgetKind::fence;
    if (name == "cycle")
        return GadgetKind::cycle;
    throw InputError("unknown gadget kind '" + name + "'");
}

auto is_odd_square(std::uint64_t n) -> bool
{
    auto r = isqrt(n);
    return r * r == n && n % 2 == 1;
}

auto psi(std::uint64_t phi_v, std::uint64_t n) -> std::uint64_t
{
    if (!is_odd_square(n))
        throw InputError("n=" + std::to_string(n) + " is not an odd perfect square");
    if (phi_v >= n)
        throw InputError("phi value " + std::to_string(phi_v) + " out of range 0.." + std::to_string(n - 1));
    return (phi_v * n * isqrt(n)) % (n * n);
}

auto sigma(std::uint64_t phi_v, std::uint64_t n) -> std::uint64_t
{
    if (!is_odd_square(n))
        throw InputError("n=" + std::to_string(n) + " is not an odd perfect square");
    if (phi_v >= n)
        throw InputError("phi value " + std::to_string(phi_v) + " out of range 0.." + std::to_string(n - 1));
    return (phi_v * n * isqrt(n)) / (n * n);
}

auto padded_vertex_count(std::uint64_t vertex_count, std::uint64_t s) -> std::uint64_t
{
    std::uint64_t root = 1;
    while (root * root < vertex_count || root * root <= s + 1)
        root += 2;
    return root * root;
}

TorusLayout::TorusLayout(std::uint64_t n, std::vector<std::uint64_t> phi) : n_(n), phi_(std::move(phi))
{
    if (!is_odd_square(n))
        throw InputError("torus layout needs an odd perfect square, got n=" + std::to_string(n));
    if (phi_.size() != n)
        throw InputError("phi must have exactly n=" + std::to_string(n) + " entries");
    std::vector<char> hit(n, 0);
    for (auto p : phi_) {
        if (p >= n || hit[p])
            throw InputError("phi is not a bijection onto 0.." + std::to_string(n - 1));
        hit[p] = 1;
    }
}

auto TorusLayout::attachment(std::uint64_t u) const -> std::uint64_t
{
    return psi(phi_[u], n_) * side() + sigma(phi_[u], n_);
}

auto ReductionStep::gadget_size() const -> std::uint64_t
{
    switch (kind) {
    case GadgetKind::torus:
        return torus ? torus->torus_size() : 0;
    case GadgetKind::fence:
        return fence::size;
    case GadgetKind::cycle:
        return 4;
    }
    return 0;
}

auto ReductionStep::gadget_edge_count() const -> std::uint64_t
{
    switch (kind) {
    case GadgetKind::torus:
        return 2 * gadget_size();
    case GadgetKind::fence:
        return fence::internal_edge_count;
    case GadgetKind::cycle:
        return 4;
    }
    return 0;
}

auto ReductionStep::base_graph() const -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < ports.size(); ++v)
        for (const auto &p : ports[v])
            if (v < p.neighbor)
                edges.push_back({static_cast<Vertex>(v), p.neighbor});
    return Graph::from_edges(base_n, edges);
}

void ReductionTrace::validate() const
{
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto &step = steps[i];
        if (step.ports.size() != step.base_n)
            throw InputError("trace step " + std::to_string(i) + ": port table covers " +
                             std::to_string(step.ports.size()) + " of " + std::to_string(step.base_n) +
                             " base vertices");
        if (step.kind == GadgetKind::torus && !step.torus)
            throw InputError("trace step " + std::to_string(i) + ": torus step without layout");
        if (step.kind != GadgetKind::torus && step.input_n != step.base_n)
            throw InputError("trace step " + std::to_string(i) + ": gadget steps cannot pad");
        if (i + 1 < steps.size()) {
            const auto &next = steps[i + 1];
            if (next.input_n != step.output_n() || next.param != step.output_k())
                throw InputError("trace steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                 " do not compose");
        }
    }
}

auto reduce_clique_to_dks5(const CliqueInstance &inst, const ReductionOptions &opts) -> TorusReduction
{
    inst.validate();
    if (inst.s < 2)
        throw InputError("clique reduction needs s >= 2");
    const auto &g = inst.graph;
    const auto n = padded_vertex_count(g.vertex_count(), inst.s);
    check_cap(saturating_pow5(n), opts, "torus reduction output");

    std::vector<std::uint64_t> phi(n);
    for (std::uint64_t v = 0; v < n; ++v)
        phi[v] = v;

    ReductionStep step;
    step.kind = GadgetKind::torus;
    step.input_n = g.vertex_count();
    step.base_n = n;
    step.param = inst.s;
    step.torus.emplace(n, std::move(phi));
    const auto &layout = *step.torus;
    step.ports.resize(n);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (auto u : g.neighbors(v))
            step.ports[v].push_back({u, layout.attachment(u)});

    const auto side = layout.side();
    std::vector<Edge> edges;
    edges.reserve(2 * step.output_n() + g.edge_count());
    for (std::uint64_t v = 0; v < n; ++v)
        for (std::uint64_t i = 0; i < side; ++i)
            for (std::uint64_t j = 0; j < side; ++j) {
                auto here = layout.vertex_index(v, i, j);
                edges.push_back({here, layout.vertex_index(v, (i + 1) % side, j)});
                edges.push_back({here, layout.vertex_index(v, i, (j + 1) % side)});
            }
    for (auto e : g.edges())
        edges.push_back({step.vertex_of(e.u, layout.attachment(e.v)), step.vertex_of(e.v, layout.attachment(e.u))});

    TorusReduction out;
    out.instance.graph = Graph::from_edges(step.output_n(), edges);
    out.instance.k = step.output_k();
    out.instance.degree_bound = 5;
    out.threshold = 2 * inst.s * layout.torus_size() + inst.s * (inst.s - 1) / 2;
    out.trace.steps.push_back(std::move(step));
    return out;
}

auto reduce_deg5_to_deg4_fence(const DksInstance &inst, const ReductionOptions &opts) -> GadgetReduction
{
    return replace_vertices(inst, GadgetKind::fence, 6, 4, opts);
}

auto reduce_deg4_to_deg3_cycle(const DksInstance &inst, const ReductionOptions &opts) -> GadgetReduction
{
    return replace_vertices(inst, GadgetKind::cycle, 4, 3, opts);
}

auto reduce_degree_chain(const DksInstance &inst, std::uint64_t base_threshold, const ReductionOptions &opts)
    -> ChainReduction
{
    check_cap(8 * inst.graph.vertex_count(), opts, "fence reduction output");
    check_cap(32 * inst.graph.vertex_count(), opts, "cycle reduction output");

    ChainReduction out;
    auto fence_step = reduce_deg5_to_deg4_fence(inst, opts);
    auto fence_threshold = fence::internal_edge_count * inst.k + base_threshold;
    auto cycle_step = reduce_deg4_to_deg3_cycle(fence_step.instance, opts);

    out.thresholds = {fence_threshold, 4 * fence_step.instance.k + fence_threshold};
    out.trace.steps = {std::move(fence_step.trace.steps.front()), std::move(cycle_step.trace.steps.front())};
    out.levels = {std::move(fence_step.instance), std::move(cycle_step.instance)};
    return out;
}

auto reduce_full_chain(const CliqueInstance &inst, const ReductionOptions &opts) -> ChainReduction
{
    inst.validate();
    if (inst.s < 2)
        throw InputError("clique reduction needs s >= 2");
    auto torus_n = saturating_pow5(padded_vertex_count(inst.graph.vertex_count(), inst.s));
    check_cap(torus_n, opts, "torus reduction output");
    check_cap(torus_n > UINT64_MAX / 32 ? UINT64_MAX : 8 * torus_n, opts, "fence reduction output");
    check_cap(torus_n > UINT64_MAX / 32 ? UINT64_MAX : 32 * torus_n, opts, "cycle reduction output");

    auto torus = reduce_clique_to_dks5(inst, opts);
    auto rest = reduce_degree_chain(torus.instance, torus.threshold, opts);

    ChainReduction out;
    out.thresholds = {torus.threshold, rest.thresholds[0], rest.thresholds[1]};
    out.trace.steps.push_back(std::move(torus.trace.steps.front()));
    for (auto &step : rest.trace.steps)
        out.trace.steps.push_back(std::move(step));
    out.levels.push_back(std::move(torus.instance));
    for (auto &level : rest.levels)
        out.levels.push_back(std::move(level));
    return out;
}

auto first_partial_gadget(const ReductionStep &step, std::span<const Vertex> vertices) -> std::optional<std::size_t>
{
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    const auto size = step.gadget_size();
    for (std::size_t i = 0; i < sorted.size();) {
        auto gadget = step.gadget_of(sorted[i]);
        std::size_t j = i;
        while (j < sorted.size() && step.gadget_of(sorted[j]) == gadget)
            ++j;
        if (j - i != size)
            return gadget;
        i = j;
    }
    return std::nullopt;
}

auto lift_solution(const ReductionStep &step, const Solution &sol) -> Solution
{
    for (auto v : sol.vertices)
        if (v >= step.output_n())
            throw InputError("solution vertex " + std::to_string(v + 1) + " is outside the reduced graph");
    if (auto partial = first_partial_gadget(step, sol.vertices))
        throw PreconditionError(to_string(step.kind) + " gadget of base vertex " + std::to_string(*partial + 1) +
                                " is only partially selected; run repair first");

    std::vector<Vertex> base;
    for (auto v : sol.vertices)
        if (step.local_of(v) == 0)
            base.push_back(static_cast<Vertex>(step.gadget_of(v)));
    return Solution::of(step.base_graph(), std::move(base));
}

auto lift_solution(const ReductionTrace &trace, std::size_t level, const Solution &sol) -> Solution
{
    if (level >= trace.steps.size())
        throw InputError("trace has no level " + std::to_string(level));
    return lift_solution(trace.steps[level], sol);
}

auto expand_solution(const ReductionStep &step, const Graph &g_star, std::span<const Vertex> base_vertices) -> Solution
{
    std::vector<Vertex> out;
    out.reserve(base_vertices.size() * step.gadget_size());
    for (auto v : base_vertices) {
        if (v >= step.base_n)
            throw InputError("base vertex " + std::to_string(v + 1) + " out of range");
        for (std::uint64_t local = 0; local < step.gadget_size(); ++local)
            out.push_back(step.vertex_of(v, local));
    }
    return Solution::of(g_star, std::move(out));
}

} // namespace gadgetforge
