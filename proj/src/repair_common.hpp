#pragma once

#include <gadgetforge/repair.hpp>

#include <string>
#include <vector>

namespace gadgetforge::detail {

// Records moves and violations for one repair run. A move first whitens its
// donors, then blackens its targets; the edge change of each phase is kept
// so bounds on losses and gains can be checked separately.
class Recorder {
public:
    Recorder(Coloring &coloring, RepairReport &report, const RepairOptions &opts)
        : coloring_(coloring), report_(report), opts_(opts)
    {
    }

    void violation(std::string check, std::optional<std::size_t> gadget, std::string detail);

    class Move {
    public:
        Move(Recorder &owner, std::string kind, std::optional<std::size_t> gadget);

        void whiten(Vertex v);
        void blacken(Vertex v);

        auto loss() const -> std::int64_t { return start_ - middle_; }
        auto gain() const -> std::int64_t;

        // Commits the move to the report and checks loss <= max_loss,
        // gain >= min_gain and a non-negative net change.
        void finish(std::int64_t max_loss, std::int64_t min_gain);

    private:
        Recorder &owner_;
        RepairMove move_;
        std::int64_t start_;
        std::int64_t middle_;
        std::size_t full_before_;
        bool blackening_ = false;
    };

    auto begin(std::string kind, std::optional<std::size_t> gadget) -> Move { return Move(*this, std::move(kind), gadget); }

    auto coloring() -> Coloring & { return coloring_; }
    auto report() -> RepairReport & { return report_; }

private:
    Coloring &coloring_;
    RepairReport &report_;
    const RepairOptions &opts_;
};

// Throws InputError unless sol fits the step and has size output_k().
void check_repair_input(const Graph &g_star, const ReductionStep &step, const Solution &sol, GadgetKind expected);

// Exactly one incomplete gadget is impossible when the black count is a
// multiple of the gadget size; throws InternalError if it happens anyway.
void check_donor_existence(Recorder &rec);

void finish_report(Recorder &rec);

} // namespace gadgetforge::detail
