// pcp — partition coloring solver suite.
// Structured results go to stdout, diagnostics to stderr.
// Exit status: 0 = yes, 1 = no, 2 = error.

#include "pcp/exact.hpp"
#include "pcp/gen.hpp"
#include "pcp/io.hpp"
#include "pcp/lattice.hpp"
#include "pcp/oracle.hpp"
#include "pcp/reductions.hpp"
#include "pcp/special.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct SolveFlags {
    std::string mode = "auto";
    int repeats = 2;
    bool exact_arith = false;
    uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

pcp::Solution run_solver(const pcp::PcpInstance& inst, const SolveFlags& flags) {
    pcp::ExactOptions exact;
    exact.exact_wide = flags.exact_arith;
    exact.repeats = flags.repeats;
    exact.seed = flags.seed;

    if (flags.mode == "auto") {
        pcp::DispatchConfig cfg;
        cfg.exact = exact;
        return pcp::dispatch(inst, cfg);
    }
    if (flags.mode == "exact") return pcp::solve_exact(inst, exact);
    if (flags.mode == "oracle") return pcp::oracle_solve(inst);
    if (flags.mode == "special") {
        if (inst.max_part_size() == 1 && inst.k <= 2) return pcp::solve_q1(inst);
        return pcp::solve_q2k1(inst);
    }
    throw std::runtime_error("unknown mode " + flags.mode);
}

int cmd_solve(const std::string& path, const SolveFlags& flags) {
    const pcp::PcpInstance inst = pcp::parse_instance(slurp(path));

    const double t0 = now_ms();
    pcp::Solution sol = run_solver(inst, flags);
    const double t1 = now_ms();

    pcp::ResultRecord rec;
    rec.solution = std::move(sol);
    rec.wall_ms = t1 - t0;
    rec.lattice_size = pcp::LatticeShape::from_instance(inst).size;
    rec.instance = &inst;
    std::cout << pcp::serialize_result(rec) << '\n';
    return rec.solution.yes ? 0 : 1;
}

int cmd_reduce(const std::string& kind, const std::string& input, const std::string& output,
               const std::string& provenance_path, int q, int ki, int k, int q_target,
               int k_target) {
    pcp::ReductionOutput out;
    if (kind == "3sat") {
        out = pcp::reduce_3sat_to_pcp22(pcp::parse_cnf(slurp(input)));
    } else if (kind == "qsat") {
        out = pcp::reduce_qsat_to_pcpk1(pcp::parse_cnf(slurp(input)), q);
    } else if (kind == "is") {
        auto [n, edges] = pcp::parse_edge_list(slurp(input));
        out = pcp::reduce_is_to_pcp(n, edges, ki, k);
    } else if (kind == "pad") {
        out = pcp::pad_instance(pcp::parse_instance(slurp(input)), q_target, k_target);
    } else {
        throw std::runtime_error("unknown reduction kind " + kind);
    }
    spit(output, pcp::serialize_instance(out.instance));
    if (!provenance_path.empty()) spit(provenance_path, pcp::serialize_provenance(out));
    return 0;
}

int cmd_gen(int n, int p, int q, double edge_prob, int k, uint64_t seed,
            const std::string& output) {
    const pcp::PcpInstance inst = pcp::gen_instance(n, p, q, edge_prob, k, seed);
    const std::string text = pcp::serialize_instance(inst);
    if (output.empty())
        std::cout << text;
    else
        spit(output, text);
    return 0;
}

// Suite rows: "n p q k edge_prob seed" per line; '#'/'c' comments allowed.
int cmd_bench(const std::string& suite_path, const SolveFlags& flags) {
    std::istringstream ss(slurp(suite_path));
    std::string line;
    std::vector<double> log_size, log_time;
    std::cout << "n\tp\tq\tk\tedge_prob\tseed\tlattice_size\tverdict\twall_ms\n";
    while (std::getline(ss, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "#" || first == "c") continue;
        int n = std::stoi(first), p, q, k;
        double edge_prob;
        uint64_t seed;
        if (!(ls >> p >> q >> k >> edge_prob >> seed)) {
            std::cerr << "bad suite row, skipping: " << line << '\n';
            continue;
        }
        try {
            const pcp::PcpInstance inst = pcp::gen_instance(n, p, q, edge_prob, k, seed);
            const uint64_t size = pcp::LatticeShape::from_instance(inst).size;
            std::vector<double> times;
            pcp::Solution sol;
            for (int rep = 0; rep < 3; ++rep) {
                const double t0 = now_ms();
                sol = run_solver(inst, flags);
                times.push_back(now_ms() - t0);
            }
            std::sort(times.begin(), times.end());
            const double median = times[1];
            std::cout << n << '\t' << p << '\t' << q << '\t' << k << '\t' << edge_prob << '\t'
                      << seed << '\t' << size << '\t' << (sol.yes ? "yes" : "no") << '\t'
                      << median << '\n';
            if (median > 0) {
                log_size.push_back(std::log(static_cast<double>(size)));
                log_time.push_back(std::log(median));
            }
        } catch (const std::exception& e) {
            std::cout << "c row failed: " << e.what() << '\n';
        }
    }
    if (log_size.size() >= 2) {
        const size_t cnt = log_size.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < cnt; ++i) {
            sx += log_size[i];
            sy += log_time[i];
            sxx += log_size[i] * log_size[i];
            sxy += log_size[i] * log_time[i];
        }
        const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        std::cout << "c log-log slope time vs lattice size: " << slope << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition coloring solver suite"};
    app.require_subcommand(1);

    SolveFlags flags;

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    std::string solve_path;
    solve->add_option("file", solve_path, "instance file")->required();
    solve->add_option("--mode", flags.mode, "auto|exact|oracle|special")
        ->check(CLI::IsMember({"auto", "exact", "oracle", "special"}));
    solve->add_option("--repeats", flags.repeats, "modular repeats");
    solve->add_flag("--exact-arith", flags.exact_arith, "arbitrary-width integer mode");
    solve->add_option("--seed", flags.seed, "prime-selection seed");

    auto* reduce = app.add_subcommand("reduce", "generate an instance from a reduction");
    std::string kind, input, output = "out.pcp", provenance;
    int q = 3, ki = 1, k = 1, q_target = 2, k_target = 2;
    reduce->add_option("kind", kind, "3sat|qsat|is|pad")->required();
    reduce->add_option("--input", input, "source file (cnf / edge list / pcp)")->required();
    reduce->add_option("--output", output, "instance file to write");
    reduce->add_option("--provenance", provenance, "provenance sidecar to write");
    reduce->add_option("--q", q, "width bound for qsat");
    reduce->add_option("--ki", ki, "independent-set target size");
    reduce->add_option("--k", k, "color budget for is");
    reduce->add_option("--q-target", q_target, "q' for pad");
    reduce->add_option("--k-target", k_target, "k' for pad");

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    int gn = 6, gp = 3, gq = 2, gk = 2;
    double edge_prob = 0.3;
    uint64_t seed = 1;
    std::string gen_output;
    gen->add_option("--n", gn, "vertex count")->required();
    gen->add_option("--p", gp, "part count")->required();
    gen->add_option("--q", gq, "max part size")->required();
    gen->add_option("--edge-prob", edge_prob, "edge probability");
    gen->add_option("--k", gk, "color budget")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--output", gen_output, "file to write (stdout if absent)");

    auto* bench = app.add_subcommand("bench", "run a benchmark suite");
    std::string suite;
    bench->add_option("suite", suite, "suite spec: 'n p q k edge_prob seed' rows")->required();
    bench->add_option("--mode", flags.mode, "auto|exact|oracle|special");
    bench->add_option("--repeats", flags.repeats, "modular repeats");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_path, flags);
        if (reduce->parsed())
            return cmd_reduce(kind, input, output, provenance, q, ki, k, q_target, k_target);
        if (gen->parsed()) return cmd_gen(gn, gp, gq, edge_prob, gk, seed, gen_output);
        if (bench->parsed()) return cmd_bench(suite, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
