#include <gadgetforge/errors.hpp>
#include <gadgetforge/generators.hpp>
#include <gadgetforge/graph_io.hpp>
#include <gadgetforge/reduction.hpp>
#include <gadgetforge/repair.hpp>
#include <gadgetforge/serialization.hpp>
#include <gadgetforge/solver.hpp>
#include <gadgetforge/verify.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

using namespace gadgetforge;

namespace {

// Instance-level failure: the command ran but the answer is "no".
struct Fail {
    std::string message;
};

struct Common {
    std::string input;
    std::string output;
    std::string trace;
    std::string solution;
    std::uint64_t seed = 0;
    std::size_t max_vertices = ReductionOptions{}.max_vertices;
};

void write_or_print(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

auto need(const std::string &value, const char *flag) -> const std::string &
{
    if (value.empty())
        throw InputError(std::string(flag) + " is required");
    return value;
}

auto vertex_list(const std::vector<Vertex> &vs) -> std::string
{
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? " " : "") << vs[i] + 1;
    return out.str();
}

// ---- gen

struct GenArgs {
    std::string kind = "random";
    std::size_t n = 10;
    std::size_t d_max = 5;
    std::size_t m = 0;
    std::size_t s = 3;
};

void cmd_gen(const Common &common, const GenArgs &args)
{
    Graph g;
    std::string note;
    if (args.kind == "grid") {
        g = gen_grid(args.n);
    } else if (args.kind == "torus") {
        g = gen_torus(args.n);
    } else if (args.kind == "random") {
        g = gen_random_degree_bounded(args.n, args.d_max, args.m, common.seed);
    } else if (args.kind == "planted") {
        auto p = gen_planted_clique(args.n, args.s, args.m, common.seed);
        g = std::move(p.graph);
        note = "c planted clique " + vertex_list(p.clique) + "\n";
    } else if (args.kind == "complete") {
        g = complete_graph(args.n);
    } else if (args.kind == "cycle") {
        g = cycle_graph(args.n);
    } else if (args.kind == "path") {
        g = path_graph(args.n);
    } else {
        throw InputError("unknown graph kind '" + args.kind + "'");
    }
    write_or_print(common.output, note + emit_graph(g));
}

// ---- stats

void cmd_stats(const Common &common)
{
    auto g = read_graph_file(need(common.input, "--input"));
    std::map<std::size_t, std::size_t> histogram;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        ++histogram[g.degree(v)];
    std::cout << "vertices " << g.vertex_count() << "\n"
              << "edges " << g.edge_count() << "\n"
              << "max_degree " << max_degree(g) << "\n"
              << "connected " << (is_connected(g) ? "yes" : "no") << "\n";
    for (auto [d, count] : histogram)
        std::cout << "degree " << d << " " << count << "\n";
}

// ---- reduce

struct ReduceArgs {
    std::string from = "clique";
    std::string to = "deg5";
    std::size_t s = 0;
    std::size_t k = 0;
    std::optional<std::uint64_t> threshold;
};

auto level_of(const std::string &name) -> int
{
    static const std::map<std::string, int> levels{{"clique", 7}, {"deg6", 6}, {"deg5", 5}, {"deg4", 4}, {"deg3", 3}};
    auto it = levels.find(name);
    if (it == levels.end())
        throw InputError("unknown problem '" + name + "' (expected clique, deg6, deg5, deg4 or deg3)");
    return it->second;
}

void cmd_reduce(const Common &common, const ReduceArgs &args)
{
    const int from = level_of(args.from);
    const int to = level_of(args.to);
    if (to == 7 || to == 6 || to >= from)
        throw InputError("cannot reduce " + args.from + " to " + args.to);
    ReductionOptions opts;
    opts.max_vertices = common.max_vertices;
    auto g = read_graph_file(need(common.input, "--input"));

    ReductionTrace trace;
    DksInstance current;
    std::optional<std::uint64_t> threshold = args.threshold;
    std::uint64_t offset = 0;

    auto apply = [&](GadgetReduction red) {
        auto bonus = red.trace.steps.front().gadget_bonus(current.k);
        offset += bonus;
        if (threshold)
            *threshold += bonus;
        trace.steps.push_back(std::move(red.trace.steps.front()));
        current = std::move(red.instance);
    };

    if (from == 7) {
        if (args.s == 0)
            throw InputError("--s is required when reducing from clique");
        if (args.threshold)
            throw InputError("--threshold is implied by --s when reducing from clique");
        CliqueInstance inst{std::move(g), args.s};
        inst.validate();
        if (to == 3)
            reduce_full_chain(inst, opts); // size check for the whole chain up front
        auto red = reduce_clique_to_dks5(inst, opts);
        threshold = red.threshold;
        trace.steps.push_back(std::move(red.trace.steps.front()));
        current = std::move(red.instance);
        current.degree_bound = 5;
        if (to <= 4)
            apply(reduce_deg5_to_deg4_fence(current, opts));
        if (to == 3)
            apply(reduce_deg4_to_deg3_cycle(current, opts));
    } else {
        if (args.s != 0)
            throw InputError("--s applies only to clique inputs; use --k");
        current = DksInstance{std::move(g), args.k, static_cast<std::size_t>(from)};
        current.validate();
        if (from >= 5)
            apply(reduce_deg5_to_deg4_fence(current, opts));
        if (to == 3)
            apply(reduce_deg4_to_deg3_cycle(current, opts));
    }

    write_or_print(common.output, emit_graph(current.graph));
    if (!common.trace.empty())
        write_text_file(common.trace, emit_trace(trace));
    std::ostream &info = common.output.empty() || common.output == "-" ? std::cerr : std::cout;
    info << "vertices " << current.graph.vertex_count() << "\n"
         << "edges " << current.graph.edge_count() << "\n"
         << "max_degree " << max_degree(current.graph) << "\n"
         << "k " << current.k << "\n";
    if (threshold)
        info << "threshold " << *threshold << "\n";
    else
        info << "offset " << offset << "\n";
}

// ---- solve

struct SolveArgs {
    std::size_t k = 0;
    std::string solver = "bb";
    double budget_secs = 60;
    std::optional<std::uint64_t> threshold;
};

void cmd_solve(const Common &common, const SolveArgs &args)
{
    auto g = read_graph_file(need(common.input, "--input"));
    DksInstance inst{std::move(g), args.k, std::nullopt};
    inst.validate();
    SolverOptions opts;
    opts.budget = std::chrono::milliseconds(static_cast<std::int64_t>(args.budget_secs * 1000));
    auto kind = solver_kind_from_string(args.solver);

    std::optional<Solution> sol;
    if (args.threshold) {
        sol = solve_threshold(inst, *args.threshold, kind, opts);
        if (!sol)
            throw Fail{"no " + std::to_string(args.k) + "-subset with at least " + std::to_string(*args.threshold) +
                       " edges"};
    } else {
        sol = solve(inst, kind, opts);
    }
    if (!common.output.empty())
        write_text_file(common.output, emit_solution(*sol));
    std::cout << "value " << sol->edge_count << "\n"
              << "vertices " << vertex_list(sol->vertices) << "\n";
}

// ---- repair and lift

auto pick_level(const ReductionTrace &trace, std::optional<std::size_t> level) -> std::size_t
{
    if (trace.steps.empty())
        throw InputError("trace has no steps");
    auto chosen = level.value_or(trace.steps.size());
    if (chosen < 1 || chosen > trace.steps.size())
        throw InputError("--level must be in 1.." + std::to_string(trace.steps.size()));
    return chosen - 1;
}

struct RepairArgs {
    std::optional<std::size_t> level;
    bool strict = false;
    std::string report;
};

void cmd_repair(const Common &common, const RepairArgs &args)
{
    auto g = read_graph_file(need(common.input, "--input"));
    auto trace = parse_trace(read_text_file(need(common.trace, "--trace")));
    auto sol = parse_solution(read_text_file(need(common.solution, "--solution")), g);
    const auto &step = trace.steps[pick_level(trace, args.level)];
    RepairOptions opts;
    opts.strict = args.strict;
    auto result = repair(g, step, sol, opts);
    if (!common.output.empty())
        write_text_file(common.output, emit_solution(result.solution));
    if (!args.report.empty())
        write_text_file(args.report, report_to_json(result.report).dump(2) + "\n");
    std::cout << "edges " << result.report.initial_edges << " -> " << result.report.final_edges << "\n"
              << "moves " << result.report.moves.size() << "\n"
              << "rounds " << result.report.rounds << "\n"
              << "violations " << result.report.violations.size() << "\n";
    if (!result.report.violations.empty())
        throw Fail{result.report.violations.front().check + ": " + result.report.violations.front().detail};
}

void cmd_lift(const Common &common, std::optional<std::size_t> level)
{
    auto g = read_graph_file(need(common.input, "--input"));
    auto trace = parse_trace(read_text_file(need(common.trace, "--trace")));
    auto sol = parse_solution(read_text_file(need(common.solution, "--solution")), g);
    auto lifted = lift_solution(trace, pick_level(trace, level), sol);
    if (!common.output.empty())
        write_text_file(common.output, emit_solution(lifted));
    std::cout << "value " << lifted.edge_count << "\n"
              << "vertices " << vertex_list(lifted.vertices) << "\n";
}

// ---- verify

struct VerifyArgs {
    std::string suite;
    std::optional<std::uint64_t> n;
    bool sampled = false;
    std::uint64_t samples = GridCutOptions{}.samples_per_size;
};

auto equivalence_corpus(std::size_t max_n, bool connected_only) -> std::vector<EquivalenceCase>
{
    std::vector<EquivalenceCase> corpus;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto &g : all_graphs(n)) {
            if (connected_only && !is_connected(g))
                continue;
            for (std::size_t k = 1; k <= n; ++k)
                corpus.push_back({g, k});
        }
    return corpus;
}

void cmd_verify(const Common &common, const VerifyArgs &args)
{
    VerifyReport report;
    if (args.suite == "grid-cut") {
        GridCutOptions opts;
        opts.force_sampled = args.sampled;
        opts.samples_per_size = args.samples;
        if (common.seed != 0)
            opts.seed = common.seed;
        report = verify_grid_cut_fact(args.n.value_or(5), opts);
    } else if (args.suite == "torus-grid") {
        report = verify_torus_dominates_grid(args.n.value_or(3));
    } else if (args.suite == "cut-intertorus") {
        auto g = read_graph_file(need(common.input, "--input"));
        auto trace = parse_trace(read_text_file(need(common.trace, "--trace")));
        auto record = parse_solution_record(read_text_file(need(common.solution, "--solution")));
        report = verify_cut_vs_intertorus(g, trace.steps.front(), record.vertices);
    } else if (args.suite == "equivalence-fence") {
        auto corpus = equivalence_corpus(static_cast<std::size_t>(args.n.value_or(3)), false);
        report = verify_reduction_equivalence(GadgetKind::fence, corpus);
    } else if (args.suite == "equivalence-cycle") {
        auto corpus = equivalence_corpus(static_cast<std::size_t>(args.n.value_or(4)), true);
        report = verify_reduction_equivalence(GadgetKind::cycle, corpus);
    } else if (args.suite == "claim") {
        report = verify_fence_claim_exhaustive();
    } else {
        throw InputError("unknown suite '" + args.suite + "'");
    }
    write_or_print(common.output, report.to_json().dump(2) + "\n");
    std::cerr << report.check << " " << report.status << "\n";
    if (report.status == "fail")
        throw Fail{report.check + " failed"};
    if (report.status == "skipped")
        throw ResourceError(report.check + ": every instance was skipped");
}

} // namespace

auto main(int argc, char **argv) -> int
{
    CLI::App app{"Densest-k-Subgraph gadget reductions: build, solve, repair, lift and verify"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--input", common.input, "input graph file");
        cmd->add_option("--output", common.output, "output file (default: stdout)");
        cmd->add_option("--seed", common.seed, "random seed");
    };

    GenArgs gen_args;
    auto *gen = app.add_subcommand("gen", "generate a graph");
    add_common(gen);
    gen->add_option("--kind", gen_args.kind, "grid, torus, random, planted, complete, cycle or path");
    gen->add_option("--n", gen_args.n, "vertex count (side length for grid and torus)");
    gen->add_option("--d-max", gen_args.d_max, "degree bound for random graphs");
    gen->add_option("--m", gen_args.m, "edge count (extra edges for planted)");
    gen->add_option("--s", gen_args.s, "planted clique size");

    auto *stats = app.add_subcommand("stats", "print graph statistics");
    add_common(stats);

    ReduceArgs reduce_args;
    auto *reduce = app.add_subcommand("reduce", "apply reductions");
    add_common(reduce);
    reduce->add_option("--from", reduce_args.from, "clique, deg6, deg5 or deg4");
    reduce->add_option("--to", reduce_args.to, "deg5, deg4 or deg3");
    reduce->add_option("--s", reduce_args.s, "clique size");
    reduce->add_option("--k", reduce_args.k, "subgraph size");
    reduce->add_option("--threshold", reduce_args.threshold, "threshold of the input instance");
    reduce->add_option("--trace", common.trace, "write the reduction trace here");
    reduce->add_option("--max-vertices", common.max_vertices, "refuse larger outputs");

    SolveArgs solve_args;
    auto *solve_cmd = app.add_subcommand("solve", "solve a Densest-k-Subgraph instance exactly");
    add_common(solve_cmd);
    solve_cmd->add_option("--k", solve_args.k, "subgraph size")->required();
    solve_cmd->add_option("--solver", solve_args.solver, "brute or bb");
    solve_cmd->add_option("--budget-secs", solve_args.budget_secs, "time budget");
    solve_cmd->add_option("--threshold", solve_args.threshold, "stop at the first solution this dense");

    RepairArgs repair_args;
    auto *repair_cmd = app.add_subcommand("repair", "make a solution gadget-complete");
    add_common(repair_cmd);
    repair_cmd->add_option("--trace", common.trace, "reduction trace")->required();
    repair_cmd->add_option("--solution", common.solution, "solution file")->required();
    repair_cmd->add_option("--level", repair_args.level, "trace step, 1-based (default: last)");
    repair_cmd->add_flag("--strict", repair_args.strict, "abort on the first violated bound");
    repair_cmd->add_option("--report", repair_args.report, "write the repair report here");

    std::optional<std::size_t> lift_level;
    auto *lift = app.add_subcommand("lift", "map a gadget-complete solution back one step");
    add_common(lift);
    lift->add_option("--trace", common.trace, "reduction trace")->required();
    lift->add_option("--solution", common.solution, "solution file")->required();
    lift->add_option("--level", lift_level, "trace step, 1-based (default: last)");

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", verify_args.suite,
                       "grid-cut, torus-grid, cut-intertorus, equivalence-fence, equivalence-cycle or claim")
        ->required();
    verify->add_option("--n", verify_args.n, "grid side, or maximum vertex count for equivalence corpora");
    verify->add_flag("--sampled", verify_args.sampled, "force sampled grid-cut mode");
    verify->add_option("--samples", verify_args.samples, "samples per subset size in sampled mode");
    verify->add_option("--trace", common.trace, "reduction trace (cut-intertorus)");
    verify->add_option("--solution", common.solution, "vertex set (cut-intertorus)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen)
            cmd_gen(common, gen_args);
        else if (*stats)
            cmd_stats(common);
        else if (*reduce)
            cmd_reduce(common, reduce_args);
        else if (*solve_cmd)
            cmd_solve(common, solve_args);
        else if (*repair_cmd)
            cmd_repair(common, repair_args);
        else if (*lift)
            cmd_lift(common, lift_level);
        else if (*verify)
            cmd_verify(common, verify_args);
        return 0;
    } catch (const Fail &f) {
        std::cerr << "FAIL: " << f.message << "\n";
        return 1;
    } catch (const ClaimViolation &e) {
        std::cerr << "FAIL: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
