#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsk/cluster.hpp"
#include "lsk/fvs.hpp"
#include "lsk/generators.hpp"
#include "lsk/io.hpp"
#include "lsk/oracle.hpp"
#include "lsk/path_contraction.hpp"

namespace {

using json = nlohmann::json;
using namespace lsk;

constexpr int exit_kernel = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KernelOptions {
    std::string input;
    int k = -1;
    std::string out;
    std::string report;
    bool timing = false;
};

StaticGraph read_input(const std::string& path, std::vector<std::string>& warnings) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    return load_graph(in, &warnings);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

void emit_report(const KernelOptions& opt, const json& report) {
    std::string text = report.dump(2) + "\n";
    if (opt.report.empty())
        std::cout << text;
    else
        write_text(opt.report, text);
}

json base_report(const char* problem, const StaticGraph& g, int k, const Verdict& v, const SpaceMeter& meter,
                 const std::vector<std::string>& warnings) {
    json r;
    r["problem"] = problem;
    r["n"] = g.n();
    r["m"] = g.m();
    r["k"] = k;
    r["verdict"] = v.is_kernel() ? "kernel" : "no-instance";
    r["kernel_n"] = v.is_kernel() ? json(v.kernel.vertex_count()) : json(nullptr);
    r["kernel_m"] = v.is_kernel() ? json(v.kernel.edge_count()) : json(nullptr);
    r["k_prime"] = v.is_kernel() ? json(v.k_prime) : json(nullptr);
    r["peak_words"] = meter.peak();
    r["warnings"] = warnings;
    return r;
}

template <class Run>
int run_kernel(const KernelOptions& opt, const char* problem, bool with_sidecar, Run&& run) {
    if (opt.k < 0) throw UsageError("--k must be a non-negative integer");
    std::vector<std::string> warnings;
    StaticGraph g = read_input(opt.input, warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    SpaceMeter meter;
    auto t0 = std::chrono::steady_clock::now();
    std::string sidecar;
    json steps;
    Verdict verdict = run(g, meter, sidecar, steps);
    auto wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    json report = base_report(problem, g, opt.k, verdict, meter, warnings);
    report["steps"] = steps;
    report["restarts"] = steps.value("restarts", 0);
    if (opt.timing) report["wall_ms"] = wall;
    if (verdict.is_kernel() && !opt.out.empty()) {
        std::ostringstream os;
        write_kernel(os, verdict.kernel);
        write_text(opt.out, os.str());
        if (with_sidecar) write_text(opt.out + ".sidecar", sidecar);
    }
    emit_report(opt, report);
    return verdict.is_kernel() ? exit_kernel : exit_no;
}

int run_pc(const KernelOptions& opt) {
    return run_kernel(opt, "path-contraction", true, [&](const StaticGraph& g, SpaceMeter& meter, std::string& sidecar,
                                                   json& steps) {
        PcResult r = kernelize_path_contraction(g, opt.k, meter);
        std::ostringstream os;
        for (const auto& c : r.chains) os << "chain " << c.end_a << ' ' << c.end_b << ' ' << c.w << ' ' << c.w2 << '\n';
        sidecar = os.str();
        steps = {{"visited", r.stats.visited},
                 {"bfs_leaves", r.stats.bfs_leaves},
                 {"max_layer", r.stats.max_layer},
                 {"merges", r.stats.merges},
                 {"chains", r.chains.size()},
                 {"restarts", 0},
                 {"reject_reason", r.stats.reject_reason}};
        return std::move(r.verdict);
    });
}

int run_fvs(const KernelOptions& opt) {
    return run_kernel(opt, "feedback-vertex-set", false, [&](const StaticGraph& g, SpaceMeter& meter, std::string&,
                                                      json& steps) {
        FvsResult r = kernelize_fvs(g, opt.k, meter);
        const FvsStats& s = r.stats;
        steps = {{"approx_size", s.approx_size},
                 {"approx_rounds", s.approx_rounds},
                 {"restarts", s.restarts},
                 {"x_size", s.x_size},
                 {"f_size", s.f_size},
                 {"t0_seen", s.t0_seen},
                 {"t1_kept", s.t1_kept},
                 {"t2_kept", s.t2_kept},
                 {"step4_additions", s.step4_additions},
                 {"y_size", s.y_size},
                 {"F", r.F},
                 {"reject_reason", s.reject_reason}};
        return std::move(r.verdict);
    });
}

int run_cluster(const KernelOptions& opt, ClusterMode mode) {
    const char* name = mode == ClusterMode::editing ? "cluster-editing" : "cluster-deletion";
    return run_kernel(opt, name, true, [&](const StaticGraph& g, SpaceMeter& meter, std::string& sidecar, json& steps) {
        ClusterResult r = kernelize_cluster(g, opt.k, mode, meter);
        std::ostringstream os;
        for (const auto& m : r.mods)
            os << "mod " << (m.add ? "add " : "del ") << m.pair.first << ' ' << m.pair.second << '\n';
        for (const auto& t : r.triples) os << "triple " << t.a << ' ' << t.center << ' ' << t.b << '\n';
        sidecar = os.str();
        steps = {{"rounds", r.stats.rounds},
                 {"nonzero_pairs", r.stats.nonzero_pairs},
                 {"kernel_vertices", r.stats.kernel_vertices},
                 {"forced_modifications", r.mods.size()},
                 {"triples", r.triples.size()},
                 {"full_kernel_vertices", r.verdict.is_kernel() ? r.full_kernel_vertices().size() : 0},
                 {"restarts", 0},
                 {"reject_reason", r.stats.reject_reason}};
        return std::move(r.verdict);
    });
}

int run_oracle(const std::string& input, const std::string& problem, int k) {
    if (k < 0) throw UsageError("--k must be a non-negative integer");
    std::ifstream in(input);
    if (!in) throw UsageError("cannot open input file '" + input + "'");
    EdgeList g = load_edge_list(in);
    oracle::SolutionSet s;
    if (problem == "pc")
        s = oracle::exact_path_contraction(g, k);
    else if (problem == "fvs")
        s = oracle::exact_fvs(g, k);
    else if (problem == "ce")
        s = oracle::exact_cluster(g, k, oracle::ClusterMode::editing);
    else
        s = oracle::exact_cluster(g, k, oracle::ClusterMode::deletion);
    std::cout << (s.yes ? "yes" : "no") << '\n';
    for (const auto& sol : s.edge_solutions) {
        std::cout << "solution";
        for (const auto& [u, v] : sol) std::cout << ' ' << u << '-' << v;
        std::cout << '\n';
    }
    for (const auto& sol : s.vertex_solutions) {
        std::cout << "solution";
        for (vertex v : sol) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return s.yes ? exit_kernel : exit_no;
}

struct GenOptions {
    std::string family;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::size_t chords = 1;
    std::size_t feedback = 1;
    std::size_t clique = 5;
    std::size_t conflicts = 1;
    std::string out;
};

int run_gen(const GenOptions& o) {
    StaticGraph g;
    if (o.family == "cycle")
        g = gen::cycle_with_chords(o.n, o.chords, o.seed);
    else if (o.family == "tree")
        g = gen::tree_with_feedback(o.n, o.feedback, o.seed);
    else
        g = gen::cluster_with_conflicts(o.n, o.clique, o.conflicts, o.seed);
    std::ostringstream os;
    write_graph(os, g);
    if (o.out.empty())
        std::cout << os.str();
    else
        write_text(o.out, os.str());
    return 0;
}

void add_kernel_flags(CLI::App* sub, KernelOptions& opt) {
    sub->add_option("--input", opt.input, "input graph (edge-list format)")->required()->check(CLI::ExistingFile);
    sub->add_option("--k", opt.k, "parameter k >= 0")->required();
    sub->add_option("--out", opt.out, "kernel output path; the sidecar goes to <out>.sidecar");
    sub->add_option("--report", opt.report, "JSON report path (default: stdout)");
    sub->add_flag("--timing", opt.timing, "add wall_ms to the report (breaks byte-identical reruns)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Space-metered kernelization for path contraction, feedback vertex set and cluster editing"};
    app.require_subcommand(1);

    KernelOptions pc_opt, fvs_opt, ce_opt, cd_opt;
    add_kernel_flags(app.add_subcommand("pc", "path contraction kernel"), pc_opt);
    add_kernel_flags(app.add_subcommand("fvs", "feedback vertex set kernel"), fvs_opt);
    add_kernel_flags(app.add_subcommand("ce", "cluster editing full kernel"), ce_opt);
    add_kernel_flags(app.add_subcommand("cd", "cluster deletion full kernel"), cd_opt);

    std::string oracle_input, oracle_problem;
    int oracle_k = -1;
    auto* orc = app.add_subcommand("oracle", "brute-force exact solver (small inputs)");
    orc->add_option("--input", oracle_input, "input graph; e/l lines may repeat")->required()->check(CLI::ExistingFile);
    orc->add_option("--k", oracle_k, "parameter k >= 0")->required();
    orc->add_option("--problem", oracle_problem, "pc | fvs | ce | cd")
        ->required()
        ->check(CLI::IsMember({"pc", "fvs", "ce", "cd"}));

    GenOptions gopt;
    auto* gen_cmd = app.add_subcommand("gen", "generate a test instance");
    gen_cmd->add_option("--family", gopt.family, "cycle | tree | cluster")
        ->required()
        ->check(CLI::IsMember({"cycle", "tree", "cluster"}));
    gen_cmd->add_option("--n", gopt.n, "vertex count")->required();
    gen_cmd->add_option("--seed", gopt.seed, "mt19937_64 seed");
    gen_cmd->add_option("--chords", gopt.chords, "cycle: chord count");
    gen_cmd->add_option("--feedback", gopt.feedback, "tree: extra edge count");
    gen_cmd->add_option("--clique", gopt.clique, "cluster: clique size");
    gen_cmd->add_option("--conflicts", gopt.conflicts, "cluster: toggled pairs");
    gen_cmd->add_option("--out", gopt.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (app.got_subcommand("pc")) return run_pc(pc_opt);
        if (app.got_subcommand("fvs")) return run_fvs(fvs_opt);
        if (app.got_subcommand("ce")) return run_cluster(ce_opt, ClusterMode::editing);
        if (app.got_subcommand("cd")) return run_cluster(cd_opt, ClusterMode::deletion);
        if (app.got_subcommand("oracle")) return run_oracle(oracle_input, oracle_problem, oracle_k);
        return run_gen(gopt);
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const oracle::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return exit_usage;
}
