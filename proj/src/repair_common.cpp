#include "repair_common.hpp"

#include <gadgetforge/errors.hpp>

#include <algorithm>
#include <numeric>

namespace gadgetforge {

auto RepairReport::delta_sum() const -> std::int64_t
{
    return std::accumulate(moves.begin(), moves.end(), std::int64_t{0},
                           [](std::int64_t acc, const RepairMove &m) { return acc + m.delta; });
}

namespace detail {

void Recorder::violation(std::string check, std::optional<std::size_t> gadget, std::string detail)
{
    if (opts_.strict)
        throw ClaimViolation(check + (gadget ? " (gadget of base vertex " + std::to_string(*gadget + 1) + ")" : "") +
                             ": " + detail);
    report_.violations.push_back({std::move(check), gadget, std::move(detail)});
}

Recorder::Move::Move(Recorder &owner, std::string kind, std::optional<std::size_t> gadget)
    : owner_(owner), start_(static_cast<std::int64_t>(owner.coloring_.black_edges())), middle_(start_),
      full_before_(owner.coloring_.full_gadgets())
{
    move_.kind = std::move(kind);
    move_.gadget = gadget;
}

void Recorder::Move::whiten(Vertex v)
{
    if (blackening_)
        throw InternalError("move whitens after blackening");
    owner_.coloring_.set_white(v);
    move_.to_white.push_back(v);
    middle_ = static_cast<std::int64_t>(owner_.coloring_.black_edges());
}

void Recorder::Move::blacken(Vertex v)
{
    blackening_ = true;
    owner_.coloring_.set_black(v);
    move_.to_black.push_back(v);
}

auto Recorder::Move::gain() const -> std::int64_t
{
    return static_cast<std::int64_t>(owner_.coloring_.black_edges()) - middle_;
}

void Recorder::Move::finish(std::int64_t max_loss, std::int64_t min_gain)
{
    move_.delta = static_cast<std::int64_t>(owner_.coloring_.black_edges()) - start_;
    if (move_.to_white.size() != move_.to_black.size())
        throw InternalError("move " + move_.kind + " changes the solution size");
    auto gadget = move_.gadget;
    auto kind = move_.kind;
    auto lost = loss();
    auto gained = gain();
    auto delta = move_.delta;
    if (owner_.coloring_.full_gadgets() > full_before_)
        ++owner_.report_.rounds;
    owner_.report_.moves.push_back(std::move(move_));

    if (lost > max_loss)
        owner_.violation(kind + ":loss", gadget,
                         "lost " + std::to_string(lost) + " black edges, bound " + std::to_string(max_loss));
    if (gained < min_gain)
        owner_.violation(kind + ":gain", gadget,
                         "gained " + std::to_string(gained) + " black edges, bound " + std::to_string(min_gain));
    if (delta < 0)
        owner_.violation(kind + ":monotonicity", gadget, "net change " + std::to_string(delta));
}

void check_repair_input(const Graph &g_star, const ReductionStep &step, const Solution &sol, GadgetKind expected)
{
    if (step.kind != expected)
        throw InputError("expected a " + to_string(expected) + " trace step, got " + to_string(step.kind));
    if (g_star.vertex_count() != step.output_n())
        throw InputError("graph has " + std::to_string(g_star.vertex_count()) +
                         " vertices but the trace step produces " + std::to_string(step.output_n()));
    if (sol.size() != step.output_k())
        throw InputError("solution has " + std::to_string(sol.size()) + " vertices, the instance needs k=" +
                         std::to_string(step.output_k()));
}

void check_donor_existence(Recorder &rec)
{
    auto incomplete = rec.coloring().incomplete_gadgets();
    if (incomplete.size() == 1) {
        rec.violation("donor-existence", incomplete.front(), "exactly one gadget is incomplete");
        throw InternalError("exactly one incomplete gadget; the black count is not a multiple of the gadget size");
    }
}

void finish_report(Recorder &rec)
{
    auto &c = rec.coloring();
    auto &report = rec.report();
    report.final_edges = c.black_edges();
    if (!c.is_gadget_complete()) {
        auto partial = c.incomplete_gadgets().front();
        rec.violation("completeness", partial, "gadget still partially selected after repair");
    }
    if (report.final_edges < report.initial_edges)
        rec.violation("monotonicity", std::nullopt,
                      "edges dropped from " + std::to_string(report.initial_edges) + " to " +
                          std::to_string(report.final_edges));
    if (report.rounds > c.step().param)
        rec.violation("rounds", std::nullopt,
                      std::to_string(report.rounds) + " completion rounds exceed k=" + std::to_string(c.step().param));
}

} // namespace detail

auto repair(const Graph &g_star, const ReductionStep &step, const Solution &sol, const RepairOptions &opts)
    -> RepairResult
{
    switch (step.kind) {
    case GadgetKind::torus:
        return repair_torus(g_star, step, sol, opts);
    case GadgetKind::fence:
        return repair_fence(g_star, step, sol, opts);
    case GadgetKind::cycle:
        return repair_cycle(g_star, step, sol, opts);
    }
    throw InternalError("unknown gadget kind");
}

} // namespace gadgetforge
