#include "repair_common.hpp"

#include <gadgetforge/errors.hpp>
#include <gadgetforge/fence_gadget.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace gadgetforge {

namespace {

using detail::Recorder;

constexpr std::uint8_t outer_bits = 0x3F;

auto bit(std::uint32_t local) -> std::uint8_t { return static_cast<std::uint8_t>(1u << local); }

auto locals_of(std::uint8_t mask) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < fence::size; ++x)
        if (mask & bit(x))
            out.push_back(x);
    return out;
}

auto other_inner(std::uint32_t v) -> std::uint32_t { return v == fence::v7 ? fence::v8 : fence::v7; }

// Inner vertex breaking Property 1 under the given coloring, if any.
auto property1_offender(std::uint8_t black) -> std::optional<std::uint32_t>
{
    for (auto v : {fence::v7, fence::v8}) {
        if (black & bit(v))
            continue;
        if (!(black & bit(other_inner(v))))
            continue;
        auto white_outer = std::popcount(static_cast<unsigned>(fence::adjacency[v] & outer_bits & ~black));
        if (white_outer <= 1)
            return v;
    }
    return std::nullopt;
}

auto white_components(std::uint8_t black) -> std::vector<std::uint8_t>
{
    std::uint8_t remaining = static_cast<std::uint8_t>(~black);
    std::vector<std::uint8_t> comps;
    while (remaining) {
        auto seed = static_cast<std::uint8_t>(remaining & (~remaining + 1));
        std::uint8_t comp = seed;
        std::uint8_t frontier = seed;
        while (frontier) {
            std::uint8_t next = 0;
            for (auto x : locals_of(frontier))
                next |= fence::adjacency[x];
            next &= static_cast<std::uint8_t>(~black & ~comp);
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        remaining &= static_cast<std::uint8_t>(~comp);
    }
    return comps;
}

auto describe(const Coloring &c, std::size_t gadget) -> std::string
{
    std::ostringstream out;
    out << "black locals {";
    auto mask = c.local_mask(gadget);
    bool first = true;
    for (auto x : locals_of(mask)) {
        out << (first ? "" : ",") << 'v' << x + 1;
        first = false;
    }
    out << "}";
    return out.str();
}

void enforce_property1_at(Recorder &rec, std::size_t gadget)
{
    auto &c = rec.coloring();
    const auto &step = c.step();
    // Each move turns a white inner vertex black, so two moves suffice.
    for (int round = 0; round < 3; ++round) {
        auto mask = c.local_mask(gadget);
        auto offender = property1_offender(mask);
        if (!offender)
            return;
        auto v = *offender;
        auto white_outer = fence::adjacency[v] & outer_bits & ~mask;

        std::optional<std::uint32_t> swap_out;
        for (auto w : locals_of(fence::adjacency[v] & outer_bits & mask)) {
            if (white_outer == 0 || c.black_degree(step.vertex_of(gadget, w)) <= 2) {
                swap_out = w;
                break;
            }
        }
        if (!swap_out) {
            rec.violation("property1:donor", gadget, "no black outer neighbour of black degree <= 2; " +
                                                         describe(c, gadget));
            auto blacks = locals_of(fence::adjacency[v] & outer_bits & mask);
            swap_out = *std::min_element(blacks.begin(), blacks.end(), [&](auto a, auto b) {
                return c.black_degree(step.vertex_of(gadget, a)) < c.black_degree(step.vertex_of(gadget, b));
            });
        }

        auto bound = white_outer == 0 ? 3 : 2;
        auto move = rec.begin("property1", gadget);
        move.whiten(step.vertex_of(gadget, *swap_out));
        move.blacken(step.vertex_of(gadget, v));
        move.finish(bound, bound);
    }
    rec.violation("property1:termination", gadget, describe(c, gadget));
}

// The two disconnected four-white configurations left once there are no
// singleton white vertices, up to automorphism, with the recoloring that
// connects them: whites {v1,v2,v4,v5} -> v1 black, v3 white; whites
// {v2,v3,v5,v6} -> v2 black, v4 white.
struct CanonicalSwap {
    std::uint8_t whites;
    std::uint32_t to_black;
    std::uint32_t to_white;
};

constexpr std::array<CanonicalSwap, 2> canonical_swaps{{
    {static_cast<std::uint8_t>((1u << 0) | (1u << 1) | (1u << 3) | (1u << 4)), 0, 2},
    {static_cast<std::uint8_t>((1u << 1) | (1u << 2) | (1u << 4) | (1u << 5)), 1, 3},
}};

auto canonical_swap(std::uint8_t whites) -> std::optional<std::pair<std::uint32_t, std::uint32_t>>
{
    for (const auto &perm : fence::automorphisms) {
        std::uint8_t image = 0;
        for (auto x : locals_of(whites))
            image |= bit(perm[x]);
        for (const auto &swap : canonical_swaps) {
            if (image != swap.whites)
                continue;
            std::array<std::uint32_t, fence::size> inverse{};
            for (std::uint32_t x = 0; x < fence::size; ++x)
                inverse[perm[x]] = x;
            return std::pair{inverse[swap.to_black], inverse[swap.to_white]};
        }
    }
    return std::nullopt;
}

void enforce_property2_at(Recorder &rec, std::size_t gadget)
{
    auto &c = rec.coloring();
    const auto &step = c.step();
    // Every move merges white components, so four moves suffice.
    for (int round = 0; round < 5; ++round) {
        auto mask = c.local_mask(gadget);
        if (holds_property2(mask)) {
            if (!holds_property1(mask))
                rec.violation("property2:keeps-property1", gadget, describe(c, gadget));
            return;
        }
        auto whites = static_cast<std::uint8_t>(~mask);
        auto comps = white_components(mask);

        std::optional<std::uint32_t> single;
        for (auto comp : comps)
            if (std::popcount(static_cast<unsigned>(comp)) == 1) {
                auto x = static_cast<std::uint32_t>(std::countr_zero(static_cast<unsigned>(comp)));
                if (!single || x < *single)
                    single = x;
            }

        if (single) {
            auto w = *single;
            std::uint8_t near_others = 0;
            for (auto x : locals_of(static_cast<std::uint8_t>(whites & ~bit(w))))
                near_others |= fence::adjacency[x];
            auto candidates = locals_of(static_cast<std::uint8_t>(near_others & mask));
            if (candidates.empty()) {
                rec.violation("property2:donor", gadget, describe(c, gadget));
                return;
            }
            auto chosen = candidates.front();
            for (auto b : candidates)
                if (holds_property1(static_cast<std::uint8_t>((mask | bit(w)) & ~bit(b)))) {
                    chosen = b;
                    break;
                }
            auto bound = (fence::adjacency[w] & bit(chosen)) ? 2 : 3;
            auto move = rec.begin("property2-singleton", gadget);
            move.whiten(step.vertex_of(gadget, chosen));
            move.blacken(step.vertex_of(gadget, w));
            move.finish(bound, bound);
            continue;
        }

        auto swap = canonical_swap(whites);
        if (!swap) {
            rec.violation("property2:configuration", gadget, "unexpected white configuration; " + describe(c, gadget));
            return;
        }
        auto move = rec.begin("property2-swap", gadget);
        move.whiten(step.vertex_of(gadget, swap->second));
        move.blacken(step.vertex_of(gadget, swap->first));
        move.finish(2, 2);
    }
    rec.violation("property2:termination", gadget, describe(c, gadget));
}

void check_fence_step(const ReductionStep &step)
{
    if (step.kind != GadgetKind::fence)
        throw InputError("expected a fence trace step, got " + to_string(step.kind));
}

// Black vertex outside `skip` in an incomplete gadget with the smallest black
// degree. Used only after the prescribed donor was missing.
auto greedy_donor(const Coloring &c, std::size_t skip) -> std::optional<Vertex>
{
    std::optional<Vertex> best;
    for (auto g : c.incomplete_gadgets()) {
        if (g == skip)
            continue;
        for (std::uint32_t x = 0; x < fence::size; ++x) {
            auto v = c.step().vertex_of(g, x);
            if (c.is_black(v) && (!best || c.black_degree(v) < c.black_degree(*best)))
                best = v;
        }
    }
    return best;
}

class FenceCompleter {
public:
    FenceCompleter(Recorder &rec) : rec_(rec), c_(rec.coloring()), step_(c_.step()) {}

    void complete(std::size_t target, std::uint32_t white)
    {
        target_ = target;
        switch (white) {
        case 1:
            one_white();
            break;
        case 2:
            two_white();
            break;
        case 3:
            three_white();
            break;
        case 4:
            four_white();
            break;
        default:
            many_white(white);
            break;
        }
    }

private:
    auto others() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        for (auto g : c_.incomplete_gadgets())
            if (g != target_)
                out.push_back(g);
        return out;
    }

    auto vertices(std::size_t gadget, const std::vector<std::uint32_t> &locals) const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (auto x : locals)
            out.push_back(step_.vertex_of(gadget, x));
        return out;
    }

    // Whitens the given donors, then every white vertex of the target.
    void finish_with(const std::string &kind, const std::vector<Vertex> &donors, std::int64_t max_loss,
                     std::int64_t min_gain)
    {
        auto holes = vertices(target_, locals_of(static_cast<std::uint8_t>(~c_.local_mask(target_))));
        auto move = rec_.begin(kind, target_);
        for (auto v : donors)
            move.whiten(v);
        for (auto v : holes)
            move.blacken(v);
        move.finish(max_loss, min_gain);
    }

    // Part 2 witness of size j from the lowest gadget with >= j black and
    // >= j white vertices.
    auto part2_donors(std::uint32_t j) -> std::optional<std::vector<Vertex>>
    {
        for (auto g : others()) {
            if (c_.gadget_black(g) < j || c_.gadget_white(g) < j)
                continue;
            auto claim = check_fence_claim(c_, g);
            if (auto &witness = claim.part2_witness[j - 1])
                return vertices(g, *witness);
            rec_.violation("claim:part2", g, "no " + std::to_string(j) + "-set within bound; " + describe(c_, g));
            return std::nullopt;
        }
        return std::nullopt;
    }

    // Successive Part 4 picks: each time, a black vertex of black degree <= 2
    // in the lowest gadget holding one to three black vertices. Recolors as it
    // goes, since each pick changes the degrees seen by the next.
    void part4_sequence(const std::string &kind, std::uint32_t count, std::int64_t max_loss, std::int64_t min_gain)
    {
        auto holes = vertices(target_, locals_of(static_cast<std::uint8_t>(~c_.local_mask(target_))));
        auto move = rec_.begin(kind, target_);
        for (std::uint32_t picked = 0; picked < count; ++picked) {
            std::optional<Vertex> donor;
            for (auto g : others()) {
                auto black = c_.gadget_black(g);
                if (black < 1 || black > 3)
                    continue;
                auto claim = check_fence_claim(c_, g);
                if (claim.part4_witness) {
                    donor = step_.vertex_of(g, *claim.part4_witness);
                } else {
                    rec_.violation("claim:part4", g, describe(c_, g));
                }
                break;
            }
            if (!donor) {
                rec_.violation(kind + ":donor", target_, "no gadget with one to three black vertices");
                donor = greedy_donor(c_, target_);
                if (!donor)
                    throw InternalError("no donor vertex left for fence completion");
            }
            move.whiten(*donor);
        }
        for (auto v : holes)
            move.blacken(v);
        move.finish(max_loss, min_gain);
    }

    void fallback(const std::string &kind, std::uint32_t count)
    {
        rec_.violation(kind + ":donor", target_, "prescribed donor unavailable, completing greedily");
        auto holes = vertices(target_, locals_of(static_cast<std::uint8_t>(~c_.local_mask(target_))));
        auto move = rec_.begin(kind + "-greedy", target_);
        for (std::uint32_t i = 0; i < count; ++i) {
            auto donor = greedy_donor(c_, target_);
            if (!donor)
                throw InternalError("no donor vertex left for fence completion");
            move.whiten(*donor);
        }
        for (auto v : holes)
            move.blacken(v);
        move.finish(INT64_MAX, 0);
    }

    void one_white()
    {
        if (auto donors = part2_donors(1))
            finish_with("fence-complete-1", *donors, 3, 3);
        else
            fallback("fence-complete-1", 1);
    }

    void two_white()
    {
        std::vector<Vertex> singles;
        for (auto g : others())
            if (c_.gadget_black(g) == 1 && singles.size() < 2)
                singles.push_back(vertices(g, locals_of(c_.local_mask(g))).front());
        if (singles.size() == 2) {
            finish_with("fence-complete-2-singletons", singles, 2, 5);
            return;
        }
        if (auto donors = part2_donors(2))
            finish_with("fence-complete-2-part2", *donors, 5, 5);
        else
            fallback("fence-complete-2", 2);
    }

    void three_white()
    {
        for (auto g : others())
            if (c_.gadget_black(g) >= 3 && c_.gadget_white(g) >= 3) {
                if (auto donors = part2_donors(3))
                    finish_with("fence-complete-3-part2", *donors, 7, 7);
                else
                    fallback("fence-complete-3", 3);
                return;
            }
        part4_sequence("fence-complete-3-part4", 3, 7, 7);
    }

    void four_white()
    {
        for (auto g : others())
            if (c_.gadget_white(g) == 4) {
                auto claim = check_fence_claim(c_, g);
                if (claim.part3_witness) {
                    finish_with("fence-complete-4-part3", vertices(g, *claim.part3_witness), 8, 8);
                } else {
                    rec_.violation("claim:part3", g, describe(c_, g));
                    fallback("fence-complete-4", 4);
                }
                return;
            }
        part4_sequence("fence-complete-4-part4", 4, 8, 8);
    }

    // Five to seven white vertices: the target has at most three black
    // vertices, hence at least 10, 12 or 13 non-black internal edges, and
    // every other incomplete gadget also has at most three black vertices.
    void many_white(std::uint32_t white)
    {
        const std::int64_t min_gain = white == 5 ? 10 : white == 6 ? 12 : 13;
        const std::int64_t max_loss = white == 7 ? 7 : 2 * white;
        part4_sequence("fence-complete-" + std::to_string(white), white, max_loss, min_gain);
    }

    Recorder &rec_;
    Coloring &c_;
    const ReductionStep &step_;
    std::size_t target_ = 0;
};

void enforce_properties(Recorder &rec)
{
    auto &c = rec.coloring();
    for (auto g : c.incomplete_gadgets()) {
        enforce_property1_at(rec, g);
        enforce_property2_at(rec, g);
    }
}

} // namespace

auto holds_property1(std::uint8_t black_mask) -> bool { return !property1_offender(black_mask); }

auto holds_property2(std::uint8_t black_mask) -> bool
{
    auto whites = std::popcount(static_cast<unsigned>(static_cast<std::uint8_t>(~black_mask)));
    if (whites < 2 || whites > 4)
        return true;
    return white_components(black_mask).size() == 1;
}

void enforce_property1(Coloring &coloring, RepairReport &report, const RepairOptions &opts)
{
    check_fence_step(coloring.step());
    Recorder rec(coloring, report, opts);
    for (std::size_t g = 0; g < coloring.gadget_count(); ++g)
        enforce_property1_at(rec, g);
}

void enforce_property2(Coloring &coloring, RepairReport &report, const RepairOptions &opts)
{
    check_fence_step(coloring.step());
    Recorder rec(coloring, report, opts);
    for (std::size_t g = 0; g < coloring.gadget_count(); ++g)
        enforce_property2_at(rec, g);
}

auto incident_black_edges(const Coloring &c, std::size_t gadget, std::span<const std::uint32_t> locals)
    -> std::uint32_t
{
    const auto &step = c.step();
    auto black = c.local_mask(gadget);
    std::uint8_t set = 0;
    for (auto x : locals)
        set |= bit(x);
    std::uint32_t count = 0;
    for (auto [a, b] : fence::edges)
        if ((black & bit(a)) && (black & bit(b)) && ((set & bit(a)) || (set & bit(b))))
            ++count;
    for (auto x : locals) {
        auto internal = static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(fence::adjacency[x] & black)));
        count += c.black_degree(step.vertex_of(gadget, x)) - internal;
    }
    return count;
}

auto check_fence_claim(const Coloring &c, std::size_t gadget) -> FenceClaim
{
    check_fence_step(c.step());
    FenceClaim claim;
    claim.gadget = gadget;
    auto black = c.local_mask(gadget);
    auto blacks = locals_of(black);
    const auto black_count = static_cast<std::uint32_t>(blacks.size());
    claim.white = fence::size - black_count;

    std::uint32_t black_internal = 0;
    for (auto [a, b] : fence::edges)
        if ((black & bit(a)) && (black & bit(b)))
            ++black_internal;
    claim.nonblack_internal = fence::internal_edge_count - black_internal;

    if (claim.white >= 1 && claim.white <= 3) {
        claim.part1_applies = true;
        if (claim.nonblack_internal < 2 * claim.white + 1)
            claim.failures.push_back("part1: " + std::to_string(claim.nonblack_internal) +
                                     " non-black edges with " + std::to_string(claim.white) + " white vertices");
    }

    for (std::uint32_t j = 1; j <= 3; ++j) {
        if (black_count < j || claim.white < j)
            continue;
        claim.part2_applies[j - 1] = true;
        // Lexicographic order over j-subsets of the black locals.
        std::vector<std::uint32_t> idx(j);
        for (std::uint32_t t = 0; t < j; ++t)
            idx[t] = t;
        while (true) {
            std::vector<std::uint32_t> subset;
            for (auto t : idx)
                subset.push_back(blacks[t]);
            if (incident_black_edges(c, gadget, subset) <= 2 * j + 1) {
                claim.part2_witness[j - 1] = subset;
                break;
            }
            std::int64_t t = static_cast<std::int64_t>(j) - 1;
            while (t >= 0 && idx[static_cast<std::size_t>(t)] == black_count - j + static_cast<std::uint32_t>(t))
                --t;
            if (t < 0)
                break;
            ++idx[static_cast<std::size_t>(t)];
            for (auto u = static_cast<std::size_t>(t) + 1; u < j; ++u)
                idx[u] = idx[u - 1] + 1;
        }
        if (!claim.part2_witness[j - 1])
            claim.failures.push_back("part2: no " + std::to_string(j) + "-set of black vertices with at most " +
                                     std::to_string(2 * j + 1) + " incident black edges");
    }

    if (claim.white == 4) {
        claim.part3_applies = true;
        auto incident = incident_black_edges(c, gadget, blacks);
        if (claim.nonblack_internal < 8)
            claim.failures.push_back("part3: only " + std::to_string(claim.nonblack_internal) + " non-black edges");
        if (incident > 8)
            claim.failures.push_back("part3: black vertices incident with " + std::to_string(incident) +
                                     " black edges");
        if (claim.nonblack_internal >= 8 && incident <= 8)
            claim.part3_witness = blacks;
    }

    if (black_count >= 1 && black_count <= 3) {
        claim.part4_applies = true;
        for (auto x : blacks)
            if (c.black_degree(c.step().vertex_of(gadget, x)) <= 2) {
                claim.part4_witness = x;
                break;
            }
        if (!claim.part4_witness)
            claim.failures.push_back("part4: every black vertex has black degree above 2");
    }
    return claim;
}

auto assert_fence_claim(const Coloring &c) -> std::vector<FenceClaim>
{
    std::vector<FenceClaim> out;
    for (std::size_t g = 0; g < c.gadget_count(); ++g) {
        auto claim = check_fence_claim(c, g);
        if (!claim.holds())
            throw ClaimViolation("fence claim fails at gadget of base vertex " + std::to_string(g + 1) + " (" +
                                 describe(c, g) + "): " + claim.failures.front());
        out.push_back(std::move(claim));
    }
    return out;
}

auto repair_fence(const Graph &g_star, const ReductionStep &step, const Solution &sol, const RepairOptions &opts)
    -> RepairResult
{
    detail::check_repair_input(g_star, step, sol, GadgetKind::fence);
    Coloring c(g_star, step, sol.vertices);
    RepairResult out;
    out.report.initial_edges = c.black_edges();
    Recorder rec(c, out.report, opts);
    FenceCompleter completer(rec);

    // Every round completes one more gadget; the guard only trips on a bug.
    for (std::size_t guard = 0; guard <= step.base_n; ++guard) {
        enforce_properties(rec);
        detail::check_donor_existence(rec);
        auto incomplete = c.incomplete_gadgets();
        if (incomplete.empty())
            break;

        auto target = *std::min_element(incomplete.begin(), incomplete.end(), [&](auto a, auto b) {
            return c.gadget_white(a) < c.gadget_white(b);
        });
        completer.complete(target, static_cast<std::uint32_t>(c.gadget_white(target)));
    }

    detail::finish_report(rec);
    out.solution = c.to_solution();
    return out;
}

} // namespace gadgetforge
