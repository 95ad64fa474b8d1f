#include <gadgetforge/errors.hpp>
#include <gadgetforge/parallel.hpp>
#include <gadgetforge/solver.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <vector>

namespace gadgetforge {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds budget) : end_(Clock::now() + budget) {}

    // Cheap enough to call per search node: reads the clock every 4096 calls.
    void tick()
    {
        if ((++ticks_ & 0xFFF) == 0 && Clock::now() > end_)
            throw TimeoutError("solver exceeded its time budget");
    }

private:
    Clock::time_point end_;
    std::uint64_t ticks_ = 0;
};

struct Candidate {
    std::int64_t value = -1;
    std::vector<Vertex> vertices;
};

// Larger value wins; equal values go to the lexicographically smaller set.
auto better(const Candidate &a, const Candidate &b) -> bool
{
    if (a.value != b.value)
        return a.value > b.value;
    return a.vertices < b.vertices;
}

auto mask_vertices(std::uint64_t mask) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

// a precedes b in lexicographic order of sorted vertex lists (equal sizes).
auto mask_lex_less(std::uint64_t a, std::uint64_t b) -> bool
{
    auto diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

auto adjacency_masks(const Graph &g) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (auto u : g.neighbors(v))
            adj[v] |= std::uint64_t{1} << u;
    return adj;
}

auto mask_edges(const std::vector<std::uint64_t> &adj, std::uint64_t mask) -> std::int64_t
{
    std::int64_t twice = 0;
    for (auto m = mask; m; m &= m - 1)
        twice += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(m))] & mask);
    return twice / 2;
}

// Subsets whose largest element is `top`, scanned in colexicographic order.
auto brute_small_top(const std::vector<std::uint64_t> &adj, std::size_t k, std::size_t top, Deadline &deadline)
    -> Candidate
{
    const auto top_bit = std::uint64_t{1} << top;
    std::int64_t best_value = -1;
    std::uint64_t best_mask = 0;
    auto consider = [&](std::uint64_t rest) {
        deadline.tick();
        auto value = mask_edges(adj, rest) + std::popcount(adj[top] & rest);
        auto mask = rest | top_bit;
        if (value > best_value || (value == best_value && mask_lex_less(mask, best_mask))) {
            best_value = value;
            best_mask = mask;
        }
    };
    if (k == 1) {
        consider(0);
    } else {
        // Gosper's hack over (k-1)-subsets of the bits below top.
        const auto limit = top_bit;
        for (std::uint64_t rest = (std::uint64_t{1} << (k - 1)) - 1; rest < limit;) {
            consider(rest);
            auto low = rest & (~rest + 1);
            auto ripple = rest + low;
            if (ripple == 0)
                break;
            rest = (((ripple ^ rest) >> 2) / low) | ripple;
        }
    }
    return {best_value, mask_vertices(best_mask)};
}

auto brute_large_top(const Graph &g, std::size_t k, std::size_t top, Deadline &deadline) -> Candidate
{
    Candidate best;
    std::vector<Vertex> idx(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i)
        idx[i] = static_cast<Vertex>(i);
    std::vector<Vertex> current(k);
    while (true) {
        deadline.tick();
        std::copy(idx.begin(), idx.end(), current.begin());
        current.back() = static_cast<Vertex>(top);
        Candidate here{static_cast<std::int64_t>(induced_edge_count(g, current)), current};
        if (better(here, best))
            best = std::move(here);
        // next (k-1)-combination of [0, top)
        std::size_t i = k - 1;
        while (i > 0 && idx[i - 1] == top - (k - 1) + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (auto j = i; j < k - 1; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return best;
}

class BranchAndBound {
public:
    BranchAndBound(const Graph &g, std::size_t k, Deadline &deadline) : g_(g), k_(k), deadline_(deadline)
    {
        in_count_.assign(g.vertex_count(), 0);
        scores_.reserve(g.vertex_count());
    }

    // Best solution whose smallest vertex is `first`. shared_best lets other
    // subtrees prune this one; it only prunes strictly worse branches so the
    // tie-break stays independent of scheduling.
    auto run_subtree(Vertex first, std::atomic<std::int64_t> *shared_best) -> Candidate
    {
        shared_ = shared_best;
        best_ = {};
        target_.reset();
        include(first);
        search(first + 1);
        exclude(first);
        return best_;
    }

    // First solution (in lexicographic order) reaching the threshold.
    auto run_threshold(std::int64_t threshold) -> std::optional<Candidate>
    {
        shared_ = nullptr;
        best_ = {};
        target_ = threshold;
        search(0);
        if (best_.value >= threshold)
            return best_;
        return std::nullopt;
    }

private:
    void include(Vertex v)
    {
        chosen_.push_back(v);
        edges_ += in_count_[v];
        for (auto u : g_.neighbors(v))
            ++in_count_[u];
    }

    void exclude(Vertex v)
    {
        chosen_.pop_back();
        edges_ -= in_count_[v];
        for (auto u : g_.neighbors(v))
            --in_count_[u];
    }

    auto done() const -> bool { return target_ && best_.value >= *target_; }

    // Twice an upper bound on the value reachable from here: every candidate
    // contributes its edges into the partial set plus at most half an edge
    // per later candidate neighbour, capped at remaining - 1.
    auto doubled_bound(Vertex next, std::size_t remaining) -> std::int64_t
    {
        scores_.clear();
        for (auto u = next; u < g_.vertex_count(); ++u) {
            auto nb = g_.neighbors(u);
            auto later = static_cast<std::size_t>(nb.end() - std::lower_bound(nb.begin(), nb.end(), next));
            scores_.push_back(2 * in_count_[u] + static_cast<std::int64_t>(std::min(later, remaining - 1)));
        }
        std::nth_element(scores_.begin(), scores_.begin() + static_cast<std::ptrdiff_t>(remaining - 1), scores_.end(),
                         std::greater<>());
        std::int64_t sum = 2 * edges_;
        for (std::size_t i = 0; i < remaining; ++i)
            sum += scores_[i];
        return sum;
    }

    auto pruned(std::int64_t bound) const -> bool
    {
        if (target_)
            return bound < *target_;
        if (bound <= best_.value)
            return true;
        return shared_ && bound < shared_->load(std::memory_order_relaxed);
    }

    void search(Vertex next)
    {
        deadline_.tick();
        const auto remaining = k_ - chosen_.size();
        if (remaining == 0) {
            if (edges_ > best_.value) {
                best_ = {edges_, chosen_};
                if (shared_) {
                    auto seen = shared_->load();
                    while (seen < edges_ && !shared_->compare_exchange_weak(seen, edges_)) {
                    }
                }
            }
            return;
        }
        if (g_.vertex_count() - next < remaining)
            return;
        if (pruned(doubled_bound(next, remaining) / 2))
            return;

        include(next);
        search(next + 1);
        exclude(next);
        if (done())
            return;
        search(next + 1);
    }

    const Graph &g_;
    std::size_t k_;
    Deadline &deadline_;
    std::vector<std::int64_t> in_count_;
    std::vector<Vertex> chosen_;
    std::int64_t edges_ = 0;
    Candidate best_;
    std::optional<std::int64_t> target_;
    std::atomic<std::int64_t> *shared_ = nullptr;
    std::vector<std::int64_t> scores_;
};

auto to_solution(const Graph &g, Candidate c) -> Solution { return Solution::of(g, std::move(c.vertices)); }

auto merge(std::vector<Candidate> &parts) -> Candidate
{
    Candidate best;
    for (auto &c : parts)
        if (c.value >= 0 && better(c, best))
            best = std::move(c);
    return best;
}

} // namespace

auto solver_kind_from_string(const std::string &name) -> SolverKind
{
    if (name == "brute")
        return SolverKind::brute;
    if (name == "bb")
        return SolverKind::branch_bound;
    throw InputError("unknown solver '" + name + "' (expected brute or bb)");
}

auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > UINT64_MAX)
            return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(out);
}

auto solve_bruteforce(const DksInstance &inst, const SolverOptions &opts) -> Solution
{
    inst.validate();
    const auto &g = inst.graph;
    const auto n = g.vertex_count();
    const auto k = inst.k;
    if (k == 0)
        return Solution::of(g, {});
    if (auto count = binomial(n, k); count > opts.enumeration_cap)
        throw ResourceError("brute force would enumerate " + std::to_string(count) + " subsets, above the cap of " +
                            std::to_string(opts.enumeration_cap));

    const auto tops = n - k + 1; // largest element ranges over k-1 .. n-1
    std::vector<Candidate> parts(tops);
    auto adj = n <= 64 ? adjacency_masks(g) : std::vector<std::uint64_t>{};
    parallel_for(tops, [&](std::size_t t) {
        Deadline deadline(opts.budget);
        auto top = k - 1 + t;
        parts[t] = n <= 64 ? brute_small_top(adj, k, top, deadline) : brute_large_top(g, k, top, deadline);
    });
    return to_solution(g, merge(parts));
}

auto solve_branch_bound(const DksInstance &inst, const SolverOptions &opts) -> Solution
{
    inst.validate();
    const auto &g = inst.graph;
    const auto k = inst.k;
    if (k == 0)
        return Solution::of(g, {});

    const auto firsts = g.vertex_count() - k + 1;
    std::vector<Candidate> parts(firsts);
    std::atomic<std::int64_t> shared_best{-1};
    parallel_for(firsts, [&](std::size_t f) {
        Deadline deadline(opts.budget);
        BranchAndBound search(g, k, deadline);
        parts[f] = search.run_subtree(static_cast<Vertex>(f), &shared_best);
    });
    return to_solution(g, merge(parts));
}

auto solve(const DksInstance &inst, SolverKind kind, const SolverOptions &opts) -> Solution
{
    return kind == SolverKind::brute ? solve_bruteforce(inst, opts) : solve_branch_bound(inst, opts);
}

auto solve_threshold(const DksInstance &inst, std::uint64_t threshold, SolverKind kind, const SolverOptions &opts)
    -> std::optional<Solution>
{
    inst.validate();
    const auto &g = inst.graph;
    if (inst.k == 0)
        return threshold == 0 ? std::optional{Solution::of(g, {})} : std::nullopt;

    if (kind == SolverKind::brute) {
        // Sequential colex scan; the best found so far is reported as soon as
        // it reaches the threshold.
        if (auto count = binomial(g.vertex_count(), inst.k); count > opts.enumeration_cap)
            throw ResourceError("brute force would enumerate " + std::to_string(count) +
                                " subsets, above the cap of " + std::to_string(opts.enumeration_cap));
        Deadline deadline(opts.budget);
        auto adj = g.vertex_count() <= 64 ? adjacency_masks(g) : std::vector<std::uint64_t>{};
        for (auto top = inst.k - 1; top < g.vertex_count(); ++top) {
            auto best = g.vertex_count() <= 64 ? brute_small_top(adj, inst.k, top, deadline)
                                               : brute_large_top(g, inst.k, top, deadline);
            if (best.value >= static_cast<std::int64_t>(threshold))
                return to_solution(g, std::move(best));
        }
        return std::nullopt;
    }

    Deadline deadline(opts.budget);
    BranchAndBound search(g, inst.k, deadline);
    if (auto found = search.run_threshold(static_cast<std::int64_t>(threshold)))
        return to_solution(g, std::move(*found));
    return std::nullopt;
}

auto solve_gadget_restricted(const Graph &g_star, const ReductionStep &step, std::uint64_t k_prime, SolverKind kind,
                             const SolverOptions &opts) -> Solution
{
    if (g_star.vertex_count() != step.output_n())
        throw InputError("graph does not match the trace step (" + std::to_string(g_star.vertex_count()) +
                         " vs " + std::to_string(step.output_n()) + " vertices)");
    if (k_prime % step.gadget_size() != 0)
        throw InputError("k'=" + std::to_string(k_prime) + " is not a multiple of the gadget size " +
                         std::to_string(step.gadget_size()));
    DksInstance base{step.base_graph(), static_cast<std::size_t>(k_prime / step.gadget_size()), std::nullopt};
    auto chosen = solve(base, kind, opts);
    return expand_solution(step, g_star, chosen.vertices);
}

} // namespace gadgetforge
