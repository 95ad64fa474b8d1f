#include <gadgetforge/errors.hpp>
#include <gadgetforge/serialization.hpp>

#include <algorithm>

namespace gadgetforge {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(const char *what, F &&body)
{
    try {
        return body();
    } catch (const json::exception &e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

} // namespace

auto trace_to_json(const ReductionTrace &trace) -> json
{
    json steps = json::array();
    for (const auto &step : trace.steps) {
        json s;
        s["kind"] = to_string(step.kind);
        s["input_n"] = step.input_n;
        s["base_n"] = step.base_n;
        s["param"] = step.param;
        if (step.torus) {
            s["phi"] = step.torus->phi();
        } else {
            std::vector<std::size_t> owner(step.output_n());
            for (std::size_t x = 0; x < owner.size(); ++x)
                owner[x] = step.gadget_of(static_cast<Vertex>(x)) + 1;
            s["gadget_base_index"] = owner;
        }
        json ports = json::array();
        for (const auto &list : step.ports) {
            json entry = json::array();
            for (const auto &p : list)
                entry.push_back({p.neighbor + 1, p.local});
            ports.push_back(std::move(entry));
        }
        s["ports"] = std::move(ports);
        steps.push_back(std::move(s));
    }
    return {{"format", "gadgetforge-trace"}, {"version", 1}, {"steps", std::move(steps)}};
}

auto trace_from_json(const json &doc) -> ReductionTrace
{
    return guarded("trace", [&] {
        ReductionTrace trace;
        for (const auto &s : doc.at("steps")) {
            ReductionStep step;
            step.kind = gadget_kind_from_string(s.at("kind").get<std::string>());
            step.base_n = s.at("base_n").get<std::size_t>();
            step.input_n = s.value("input_n", step.base_n);
            step.param = s.at("param").get<std::uint64_t>();
            if (step.kind == GadgetKind::torus)
                step.torus.emplace(step.base_n, s.at("phi").get<std::vector<std::uint64_t>>());
            for (const auto &list : s.at("ports")) {
                std::vector<Port> entry;
                for (const auto &p : list) {
                    auto neighbor = p.at(0).get<std::uint64_t>();
                    auto local = p.at(1).get<std::uint64_t>();
                    if (neighbor < 1 || neighbor > step.base_n)
                        throw InputError("trace port neighbor " + std::to_string(neighbor) + " out of range");
                    if (local >= step.gadget_size())
                        throw InputError("trace port offset " + std::to_string(local) + " outside the gadget");
                    entry.push_back({static_cast<Vertex>(neighbor - 1), local});
                }
                step.ports.push_back(std::move(entry));
            }
            if (s.contains("gadget_base_index")) {
                auto owner = s.at("gadget_base_index").get<std::vector<std::size_t>>();
                if (owner.size() != step.output_n())
                    throw InputError("gadget_base_index has the wrong length");
                for (std::size_t x = 0; x < owner.size(); ++x)
                    if (owner[x] != step.gadget_of(static_cast<Vertex>(x)) + 1)
                        throw InputError("gadget_base_index disagrees with the block layout at vertex " +
                                         std::to_string(x + 1));
            }
            trace.steps.push_back(std::move(step));
        }
        trace.validate();
        return trace;
    });
}

auto emit_trace(const ReductionTrace &trace) -> std::string { return trace_to_json(trace).dump() + "\n"; }

auto parse_trace(const std::string &text) -> ReductionTrace
{
    return trace_from_json(guarded("trace", [&] { return json::parse(text); }));
}

auto solution_to_json(const Solution &sol) -> json
{
    std::vector<std::uint64_t> ids;
    ids.reserve(sol.vertices.size());
    for (auto v : sol.vertices)
        ids.push_back(std::uint64_t{v} + 1);
    return {{"k", sol.vertices.size()}, {"vertices", ids}, {"edge_count", sol.edge_count}};
}

auto emit_solution(const Solution &sol) -> std::string { return solution_to_json(sol).dump() + "\n"; }

auto parse_solution_record(const std::string &text) -> SolutionRecord
{
    return guarded("solution", [&] {
        auto doc = json::parse(text);
        SolutionRecord rec;
        rec.k = doc.at("k").get<std::uint64_t>();
        rec.edge_count = doc.value("edge_count", std::uint64_t{0});
        for (auto id : doc.at("vertices").get<std::vector<std::uint64_t>>()) {
            if (id < 1 || id > UINT32_MAX)
                throw InputError("solution vertex id " + std::to_string(id) + " out of range");
            rec.vertices.push_back(static_cast<Vertex>(id - 1));
        }
        return rec;
    });
}

auto parse_solution(const std::string &text, const Graph &g) -> Solution
{
    auto rec = parse_solution_record(text);
    if (rec.vertices.size() != rec.k)
        throw InputError("solution lists " + std::to_string(rec.vertices.size()) + " vertices but declares k=" +
                         std::to_string(rec.k));
    auto sol = Solution::of(g, std::move(rec.vertices));
    if (sol.edge_count != rec.edge_count)
        throw InputError("solution declares edge_count=" + std::to_string(rec.edge_count) + " but induces " +
                         std::to_string(sol.edge_count) + " edges");
    return sol;
}

auto report_to_json(const RepairReport &report) -> json
{
    auto one_based = [](const std::vector<Vertex> &vs) {
        json out = json::array();
        for (auto v : vs)
            out.push_back(static_cast<std::uint64_t>(v) + 1);
        return out;
    };
    json moves = json::array();
    for (const auto &m : report.moves) {
        json entry{{"kind", m.kind},
                   {"to_white", one_based(m.to_white)},
                   {"to_black", one_based(m.to_black)},
                   {"delta", m.delta}};
        if (m.gadget)
            entry["gadget"] = *m.gadget + 1;
        moves.push_back(std::move(entry));
    }
    json violations = json::array();
    for (const auto &v : report.violations) {
        json entry{{"check", v.check}, {"detail", v.detail}};
        if (v.gadget)
            entry["gadget"] = *v.gadget + 1;
        violations.push_back(std::move(entry));
    }
    return json{{"initial_edges", report.initial_edges},
                {"final_edges", report.final_edges},
                {"rounds", report.rounds},
                {"delta_sum", report.delta_sum()},
                {"moves", std::move(moves)},
                {"violations", std::move(violations)}};
}

} // namespace gadgetforge
