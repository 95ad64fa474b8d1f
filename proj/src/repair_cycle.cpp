#include "repair_common.hpp"

#include <gadgetforge/errors.hpp>

#include <algorithm>

namespace gadgetforge {

namespace {

using detail::Recorder;

constexpr std::uint64_t cycle_size = 4;

auto black_locals(const Coloring &c, std::size_t gadget) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (std::uint64_t x = 0; x < cycle_size; ++x)
        if (auto v = c.step().vertex_of(gadget, x); c.is_black(v))
            out.push_back(v);
    return out;
}

auto white_locals(const Coloring &c, std::size_t gadget) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (std::uint64_t x = 0; x < cycle_size; ++x)
        if (auto v = c.step().vertex_of(gadget, x); !c.is_black(v))
            out.push_back(v);
    return out;
}

// A white vertex of the gadget with a black cycle neighbour.
auto white_next_to_black(const Coloring &c, std::size_t gadget) -> std::optional<Vertex>
{
    const auto &step = c.step();
    for (std::uint64_t x = 0; x < cycle_size; ++x) {
        auto v = step.vertex_of(gadget, x);
        if (c.is_black(v))
            continue;
        if (c.is_black(step.vertex_of(gadget, (x + 1) % cycle_size)) ||
            c.is_black(step.vertex_of(gadget, (x + 3) % cycle_size)))
            return v;
    }
    return std::nullopt;
}

auto lowest_other(const std::vector<std::size_t> &incomplete, std::size_t skip) -> std::size_t
{
    for (auto g : incomplete)
        if (g != skip)
            return g;
    throw InternalError("no second incomplete gadget");
}

// A singleton black vertex has only its external edge, so it can move next
// to a black vertex of another incomplete gadget without loss.
void evacuate(Recorder &rec, std::size_t single, const std::vector<std::size_t> &incomplete)
{
    auto &c = rec.coloring();
    auto target = lowest_other(incomplete, single);
    auto donor = black_locals(c, single).front();
    auto spot = white_next_to_black(c, target);
    if (!spot)
        throw InternalError("incomplete cycle gadget without a white vertex next to a black one");
    auto move = rec.begin("cycle-evacuate", target);
    move.whiten(donor);
    move.blacken(*spot);
    move.finish(1, 1);
}

// Fill the single white vertex of `target` with a black vertex of black
// degree <= 2 taken from another incomplete gadget.
void feed_three(Recorder &rec, std::size_t target, const std::vector<std::size_t> &incomplete)
{
    auto &c = rec.coloring();
    auto donor_gadget = lowest_other(incomplete, target);
    std::optional<Vertex> donor;
    for (auto v : black_locals(c, donor_gadget))
        if (c.black_degree(v) <= 2) {
            donor = v;
            break;
        }
    if (!donor) {
        rec.violation("cycle-low-degree-donor", donor_gadget, "no black vertex with black degree <= 2");
        auto blacks = black_locals(c, donor_gadget);
        donor = *std::min_element(blacks.begin(), blacks.end(),
                                  [&](Vertex a, Vertex b) { return c.black_degree(a) < c.black_degree(b); });
    }
    auto hole = white_locals(c, target).front();
    auto move = rec.begin("cycle-feed-three", target);
    move.whiten(*donor);
    move.blacken(hole);
    move.finish(2, 2);
}

// Every incomplete gadget has exactly two black vertices: move both of the
// second one into the first.
void merge_pairs(Recorder &rec, const std::vector<std::size_t> &incomplete)
{
    auto &c = rec.coloring();
    auto target = incomplete[0];
    auto donor = incomplete[1];
    auto donors = black_locals(c, donor);
    auto holes = white_locals(c, target);
    auto move = rec.begin("cycle-merge-pairs", target);
    for (auto v : donors)
        move.whiten(v);
    for (auto v : holes)
        move.blacken(v);
    move.finish(3, 3);
}

} // namespace

auto repair_cycle(const Graph &g_star, const ReductionStep &step, const Solution &sol, const RepairOptions &opts)
    -> RepairResult
{
    detail::check_repair_input(g_star, step, sol, GadgetKind::cycle);
    Coloring c(g_star, step, sol.vertices);
    RepairResult out;
    out.report.initial_edges = c.black_edges();
    Recorder rec(c, out.report, opts);

    // Each pass either removes a singleton gadget or completes a gadget, so
    // the number of passes is bounded by twice the gadget count.
    for (std::size_t guard = 0; guard <= 2 * step.base_n + 2; ++guard) {
        detail::check_donor_existence(rec);
        auto incomplete = c.incomplete_gadgets();
        if (incomplete.empty())
            break;

        auto with_black = [&](std::uint64_t count) -> std::optional<std::size_t> {
            for (auto g : incomplete)
                if (c.gadget_black(g) == count)
                    return g;
            return std::nullopt;
        };

        if (auto single = with_black(1))
            evacuate(rec, *single, incomplete);
        else if (auto three = with_black(3))
            feed_three(rec, *three, incomplete);
        else
            merge_pairs(rec, incomplete);
    }

    detail::finish_report(rec);
    out.solution = c.to_solution();
    return out;
}

} // namespace gadgetforge
