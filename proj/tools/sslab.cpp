#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sslab/am.hpp"
#include "sslab/instance.hpp"
#include "sslab/lowspace.hpp"
#include "sslab/params.hpp"
#include "sslab/streams.hpp"

using nlohmann::ordered_json;
using namespace sslab;

namespace {

ordered_json weight_json(i128 v) {
    if (v >= i128(INT64_MIN) && v <= i128(INT64_MAX)) return int64_t(v);
    return to_string(v);
}

uint64_t resolve_seed(std::optional<uint64_t> flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("SSLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::runtime_error("SSLAB_SEED is not a valid unsigned integer");
        }
    }
    return 12345;
}

double elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
        .count();
}

void emit(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << j.dump(2) << '\n';
    }
}

struct AlphaRange {
    double lo = 0.0, hi = 1.0;
};

AlphaRange parse_alpha_sweep(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("--alpha-sweep expects lo:hi, e.g. 0.45:0.55");
    AlphaRange r;
    r.lo = std::stod(text.substr(0, colon));
    r.hi = std::stod(text.substr(colon + 1));
    if (!(r.lo >= 0.0 && r.hi <= 1.0 && r.lo <= r.hi))
        throw std::runtime_error("--alpha-sweep range must satisfy 0 <= lo <= hi <= 1");
    return r;
}

int cmd_gen(uint32_t n, uint32_t weight_bits, int64_t solution_size,
            std::optional<uint64_t> seed_flag, const std::string& out_path,
            const std::string& format) {
    RandomSource rng(resolve_seed(seed_flag));
    GenerateOptions opt;
    opt.n = n;
    opt.weight_bits = weight_bits;
    if (solution_size >= 0) opt.solution_size = uint32_t(solution_size);
    GeneratedInstance gen = generate_instance(opt, rng);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open output file: " + out_path);
        out = &file;
    }
    if (format == "json")
        write_instance_json(*out, gen);
    else
        write_instance_text(*out, gen.instance);
    return 0;
}

int cmd_solve(const std::string& algo, const std::string& in_path,
              std::optional<uint64_t> seed_flag, const std::string& alpha_sweep,
              uint64_t max_reps, uint64_t poly_factor, int slack_window, double cutoff_c,
              uint32_t rounds, int threads, const std::string& out_path) {
    GeneratedInstance loaded = load_instance_file(in_path);
    const SubsetSumInstance& inst = loaded.instance;
    uint64_t seed = resolve_seed(seed_flag);
    auto t0 = std::chrono::steady_clock::now();

    std::string answer = "no";
    std::optional<SolutionCertificate> cert;
    ordered_json stats = ordered_json::object();

    if (algo == "hs" || algo == "ss") {
        SolveStats ss;
        cert = algo == "hs" ? horowitz_sahni(inst, &ss) : schroeppel_shamir(inst, &ss);
        answer = cert ? "yes" : "no";
        stats["peak_entries"] = ss.peak_entries;
        stats["table_entries"] = ss.table_entries;
        stats["stream_pops"] = ss.stream_pops;
    } else if (algo == "dp") {
        OracleResult res = dp_oracle(inst);
        if (res.status == OracleStatus::refused) {
            answer = "refused";
        } else {
            cert = res.certificate;
            answer = cert ? "yes" : "no";
        }
    } else if (algo == "am-enum") {
        EnumerationParams ep;
        ep.protocol.cutoff_c = cutoff_c;
        ep.rounds = rounds;
        RandomSource rng(seed);
        EnumerationStats es;
        cert = solve_by_proof_enumeration(inst, ep, rng, &es);
        answer = cert ? "yes" : "no";
        stats["residues_tried"] = es.residues_tried;
        stats["verifier_work"] = es.verifier_work;
        stats["max_a12"] = es.max_a12;
    } else if (algo == "lowspace") {
        LowspaceConfig cfg;
        if (!alpha_sweep.empty()) {
            AlphaRange r = parse_alpha_sweep(alpha_sweep);
            cfg.alpha_min = r.lo;
            cfg.alpha_max = r.hi;
        }
        cfg.max_reps = max_reps;
        cfg.poly_factor = poly_factor;
        cfg.slack = slack_window;
        LowspaceStats ls;
        cert = solve_lowspace(inst, cfg, seed, &ls);
        answer = cert ? "yes" : (ls.exhausted ? "exhausted" : "no");
        stats["reps_used"] = ls.reps_used;
        stats["s_iterations"] = ls.s_iterations;
        stats["wov_calls"] = ls.wov_calls;
        stats["family_builds"] = ls.family_builds;
        stats["majority_skips"] = ls.majority_skips;
        stats["cap_skips"] = ls.cap_skips;
        stats["mu_over_quarter"] = ls.mu_over_quarter;
        stats["peak_entries"] = ls.peak_entries;
        stats["stream_pops"] = ls.stream_pops;
        stats["budget_capped"] = ls.budget_capped;
        stats["ran_delegate"] = ls.ran_delegate;
        stats["found_by"] = ls.found_by;
    } else {
        throw std::runtime_error("unknown algorithm: " + algo +
                                 " (expected hs, ss, dp, am-enum or lowspace)");
    }

    ordered_json rep;
    rep["algo"] = algo;
    rep["n"] = inst.n();
    rep["target"] = weight_json(inst.target);
    rep["seed"] = seed;
    rep["threads"] = threads;
    rep["answer"] = answer;
    if (cert)
        rep["certificate"] = cert->indices;
    else
        rep["certificate"] = nullptr;
    rep["verified"] = cert ? verify_certificate(inst, *cert) : false;
    rep["stats"] = stats;
    rep["wall_ms"] = elapsed_ms(t0);
    emit(rep, out_path);
    if (answer == "refused") return 2;
    return answer == "yes" ? 0 : 1;
}

int cmd_bench(const std::string& algos_csv, const std::string& ns_csv, uint32_t repeats,
              uint32_t weight_bits, std::optional<uint64_t> seed_flag,
              const std::string& out_path) {
    std::vector<std::string> algos;
    {
        std::string cur;
        for (char c : algos_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) algos.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
    }
    std::vector<uint32_t> ns;
    {
        std::string cur;
        for (char c : ns_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) ns.push_back(uint32_t(std::stoul(cur)));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
    }
    uint64_t seed = resolve_seed(seed_flag);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open output file: " + out_path);
        out = &file;
    }
    *out << "algo,n,repeats,mean_ms,max_ms,mean_peak,max_peak\n";
    for (const auto& algo : algos) {
        for (uint32_t n : ns) {
            double total_ms = 0, max_ms = 0;
            double total_peak = 0;
            uint64_t max_peak = 0;
            for (uint32_t rep = 0; rep < repeats; ++rep) {
                RandomSource rng(seed + rep * 1000003ull + n);
                GenerateOptions gopt;
                gopt.n = n;
                gopt.weight_bits = weight_bits;
                gopt.solution_size = n / 2;
                GeneratedInstance gen = generate_instance(gopt, rng);
                SolveStats ss;
                LowspaceStats ls;
                auto t0 = std::chrono::steady_clock::now();
                if (algo == "hs") {
                    horowitz_sahni(gen.instance, &ss);
                } else if (algo == "ss") {
                    schroeppel_shamir(gen.instance, &ss);
                } else if (algo == "lowspace") {
                    solve_lowspace(gen.instance, LowspaceConfig{}, rng.fork_seed(), &ls);
                    ss.peak_entries = ls.peak_entries;
                } else if (algo == "dp") {
                    dp_oracle(gen.instance);
                } else {
                    throw std::runtime_error("bench: unknown algorithm " + algo);
                }
                double ms = elapsed_ms(t0);
                total_ms += ms;
                max_ms = std::max(max_ms, ms);
                total_peak += double(ss.peak_entries);
                max_peak = std::max(max_peak, ss.peak_entries);
            }
            *out << algo << ',' << n << ',' << repeats << ',' << total_ms / repeats << ','
                 << max_ms << ',' << total_peak / repeats << ',' << max_peak << '\n';
        }
    }
    return 0;
}

int cmd_verify_params(double step, double wov_step, double tol, int threads, double sabotage_beta,
                      const std::string& out_path) {
    ExponentReport er = verify_exponent_bounds(step, tol, threads, sabotage_beta);
    WovBoundReport wr = verify_wov_inequality(wov_step, tol);
    ordered_json rep;
    rep["step"] = step;
    rep["wov_step"] = wov_step;
    rep["tolerance"] = tol;
    rep["max_T"] = er.max_time;
    rep["argmax_T"] = er.argmax_time;
    rep["max_S"] = er.max_space;
    rep["argmax_S"] = er.argmax_space;
    rep["wov_max"] = wr.max_value;
    rep["wov_argmax_mu"] = wr.argmax_mu;
    rep["wov_bound"] = wr.bound;
    auto violations = ordered_json::array();
    for (const auto& v : er.violations) violations.push_back(v);
    for (const auto& v : wr.violations) violations.push_back(v);
    rep["violations"] = violations;
    emit(rep, out_path);
    return violations.empty() ? 0 : 1;
}

int cmd_simulate_am(uint32_t n, uint64_t trials, double cutoff_c, bool no_instance,
                    std::optional<uint64_t> seed_flag, const std::string& out_path) {
    RandomSource rng(resolve_seed(seed_flag));
    KSumGenerateOptions kopt;
    kopt.length = n;
    kopt.arity = 4;
    kopt.plant = !no_instance;
    GeneratedKSum gen = generate_ksum(kopt, rng);
    ProtocolParams pp;
    pp.cutoff_c = cutoff_c;
    std::optional<std::array<uint32_t, 4>> witness;
    if (gen.planted) {
        witness = std::array<uint32_t, 4>{(*gen.planted)[0], (*gen.planted)[1], (*gen.planted)[2],
                                          (*gen.planted)[3]};
    }
    SimulationReport sim = simulate_protocol(gen.instance, witness, trials, pp, rng);
    ordered_json rep;
    rep["n"] = n;
    rep["trials"] = sim.trials;
    rep["planted"] = !no_instance;
    rep["cutoff_c"] = cutoff_c;
    rep["accepts"] = sim.accepts;
    rep["accept_rate"] = sim.accept_rate;
    rep["mean_a12"] = sim.mean_a12;
    rep["max_a12"] = sim.max_a12;
    emit(rep, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subset Sum / k-SUM solver laboratory"};
    app.require_subcommand(1);

    std::optional<uint64_t> seed_flag;

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance");
    uint32_t gen_n = 24, gen_bits = 20;
    int64_t gen_solution = -1;
    std::string gen_out, gen_format = "text";
    gen->add_option("--n", gen_n, "item count");
    gen->add_option("--weight-bits", gen_bits, "magnitude of weights in bits");
    gen->add_option("--solution-size", gen_solution, "plant a solution of this size (-1: none)");
    gen->add_option("--seed", seed_flag, "rng seed (falls back to SSLAB_SEED, then 12345)");
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->add_option("--format", gen_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // solve
    auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
    std::string solve_algo = "ss", solve_in, solve_alpha, solve_out;
    uint64_t solve_max_reps = 64, solve_poly = 0;
    int solve_slack = 1, solve_threads = 1;
    double solve_cutoff = 8.0;
    uint32_t solve_rounds = 3;
    solve->add_option("--algo", solve_algo, "hs, ss, dp, am-enum or lowspace");
    solve->add_option("--in", solve_in, "instance file (text or json)")->required();
    solve->add_option("--seed", seed_flag, "rng seed (falls back to SSLAB_SEED, then 12345)");
    solve->add_option("--alpha-sweep", solve_alpha, "restrict the density sweep, lo:hi");
    solve->add_option("--max-reps", solve_max_reps, "repetition cap for lowspace");
    solve->add_option("--poly-factor", solve_poly, "polynomial repetition factor (0: n^2)");
    solve->add_option("--slack-window", solve_slack, "size window slack in family building");
    solve->add_option("--cutoff-c", solve_cutoff, "filtered-list budget constant for am-enum");
    solve->add_option("--rounds", solve_rounds, "prime rounds for am-enum");
    solve->add_option("--threads", solve_threads, "thread count (echoed into the report)");
    solve->add_option("--out", solve_out, "report path (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "time solvers on seeded planted instances");
    std::string bench_algos = "hs,ss", bench_ns = "16,20,24", bench_out;
    uint32_t bench_repeats = 3, bench_bits = 20;
    bench->add_option("--algos", bench_algos, "comma-separated algorithms");
    bench->add_option("--n", bench_ns, "comma-separated item counts");
    bench->add_option("--repeats", bench_repeats, "instances per (algo, n) cell");
    bench->add_option("--weight-bits", bench_bits, "weight magnitude in bits");
    bench->add_option("--seed", seed_flag, "rng seed (falls back to SSLAB_SEED, then 12345)");
    bench->add_option("--out", bench_out, "CSV path (default stdout)");

    // verify-params
    auto* vp = app.add_subcommand("verify-params", "audit the exponent formulas on a grid");
    double vp_step = 0.001, vp_wov_step = 0.0005, vp_tol = 1e-9, vp_sabotage = 0.0;
    int vp_threads = 1;
    std::string vp_out;
    vp->add_option("--step", vp_step, "alpha grid step");
    vp->add_option("--wov-step", vp_wov_step, "mu grid step");
    vp->add_option("--tol", vp_tol, "violation tolerance");
    vp->add_option("--threads", vp_threads, "worker threads for the alpha grid");
    vp->add_option("--sabotage-beta", vp_sabotage,
                   "add this to the schedule on the hard band (diagnostic; expect violations)");
    vp->add_option("--out", vp_out, "report path (default stdout)");

    // simulate-am
    auto* sim = app.add_subcommand("simulate-am", "run the interactive-protocol simulation");
    uint32_t sim_n = 512;
    uint64_t sim_trials = 100;
    double sim_cutoff = 8.0;
    bool sim_no_instance = false;
    std::string sim_out;
    sim->add_option("--n", sim_n, "entries per array");
    sim->add_option("--trials", sim_trials, "protocol rounds to simulate");
    sim->add_option("--cutoff-c", sim_cutoff, "filtered-list budget constant");
    sim->add_flag("--no-instance", sim_no_instance, "simulate on an unsatisfiable instance");
    sim->add_option("--seed", seed_flag, "rng seed (falls back to SSLAB_SEED, then 12345)");
    sim->add_option("--out", sim_out, "report path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_n, gen_bits, gen_solution, seed_flag, gen_out, gen_format);
        if (solve->parsed())
            return cmd_solve(solve_algo, solve_in, seed_flag, solve_alpha, solve_max_reps,
                             solve_poly, solve_slack, solve_cutoff, solve_rounds, solve_threads,
                             solve_out);
        if (bench->parsed())
            return cmd_bench(bench_algos, bench_ns, bench_repeats, bench_bits, seed_flag,
                             bench_out);
        if (vp->parsed())
            return cmd_verify_params(vp_step, vp_wov_step, vp_tol, vp_threads, vp_sabotage,
                                     vp_out);
        if (sim->parsed())
            return cmd_simulate_am(sim_n, sim_trials, sim_cutoff, sim_no_instance, seed_flag,
                                   sim_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
