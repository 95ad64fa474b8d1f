#include "repair_common.hpp"

#include <gadgetforge/errors.hpp>

#include <algorithm>
#include <numeric>

namespace gadgetforge {

auto repair_torus(const Graph &g_star, const ReductionStep &step, const Solution &sol, const RepairOptions &opts)
    -> RepairResult
{
    detail::check_repair_input(g_star, step, sol, GadgetKind::torus);
    Coloring c(g_star, step, sol.vertices);
    RepairResult out;
    out.report.initial_edges = c.black_edges();
    detail::Recorder rec(c, out.report, opts);

    const auto size = step.gadget_size();
    const auto n = step.torus->n();
    const auto small_limit = size - n * n * n;
    const auto s = static_cast<std::size_t>(step.param);

    std::vector<std::size_t> order(c.gadget_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return c.gadget_black(a) > c.gadget_black(b); });

    auto large = static_cast<std::size_t>(std::count_if(
        order.begin(), order.end(), [&](auto t) { return c.gadget_black(t) > small_limit; }));
    if (large > s)
        rec.violation("torus-large-count", std::nullopt,
                      std::to_string(large) + " large tori but only s=" + std::to_string(s));

    // Large tori sort ahead of small ones, so the first s entries complete
    // every large torus before any small one is filled.
    std::vector<std::uint8_t> chosen(c.gadget_count(), 0);
    for (std::size_t i = 0; i < s && i < order.size(); ++i)
        chosen[order[i]] = 1;

    std::vector<Vertex> leave;
    std::vector<Vertex> enter;
    for (std::size_t t = 0; t < c.gadget_count(); ++t) {
        if (c.is_complete(t) && (c.gadget_black(t) == size) == (chosen[t] != 0))
            continue;
        for (std::uint64_t x = 0; x < size; ++x) {
            auto v = step.vertex_of(t, x);
            if (c.is_black(v) && !chosen[t])
                leave.push_back(v);
            else if (!c.is_black(v) && chosen[t])
                enter.push_back(v);
        }
    }

    if (!leave.empty()) {
        auto move = rec.begin("torus-redistribute", std::nullopt);
        for (auto v : leave)
            move.whiten(v);
        for (auto v : enter)
            move.blacken(v);
        move.finish(INT64_MAX, INT64_MIN);
    }

    detail::finish_report(rec);
    out.solution = c.to_solution();
    return out;
}

} // namespace gadgetforge
