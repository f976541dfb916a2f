#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "permuta/lattice.hpp"
#include "permuta/problems.hpp"
#include "permuta/sat.hpp"
#include "permuta/search.hpp"
#include "reference_cells.hpp"

namespace {

using namespace permuta;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct SolveArgs {
    std::string instance;
    std::string model;
    std::string mode;  // injection variant, golomb/sport
    std::string heuristic = "lex";
    std::string algorithm = "auto";
    std::string goal = "first";
    double time_limit = -1;
    long node_limit = -1;
    bool no_symmetry_break = false;
    bool print_solutions = false;
};

int run_solve(const SolveArgs& args) {
    auto inst = parse_instance(args.instance);
    if (!inst) {
        std::cerr << "unknown instance: " << args.instance << '\n';
        return kExitUsage;
    }
    std::string model_tag = !args.mode.empty() ? args.mode : args.model;
    if (model_tag.empty()) {
        std::cerr << "one of --model or --mode is required\n";
        return kExitUsage;
    }
    auto model = ModelSpec::parse(model_tag);
    if (!model) {
        std::cerr << "unknown model tag: " << model_tag << '\n';
        return kExitUsage;
    }
    auto heur = parse_heur(args.heuristic);
    auto goal = parse_goal(args.goal);
    if (!heur || !goal) {
        std::cerr << "unknown heuristic or goal\n";
        return kExitUsage;
    }
    SearchConfig cfg;
    cfg.heur = *heur;
    cfg.goal = *goal;
    cfg.time_limit_s = args.time_limit;
    cfg.node_limit = args.node_limit;
    if (args.algorithm == "auto") {
        cfg.algo = model->has_primal_alldiff() || model->has_dual_alldiff() ? Algo::MGAC
                                                                            : Algo::MAC;
    } else {
        auto algo = parse_algo(args.algorithm);
        if (!algo) {
            std::cerr << "unknown algorithm: " << args.algorithm << '\n';
            return kExitUsage;
        }
        cfg.algo = *algo;
    }

    BuildOptions opts;
    opts.symmetry_breaking = !args.no_symmetry_break;
    Problem p;
    try {
        p = build_instance(*inst, *model, opts);
    } catch (const std::exception& e) {
        std::cerr << "cannot build instance: " << e.what() << '\n';
        return kExitUsage;
    }

    auto [sols, stats] = solve(p, cfg);

    const bench::ReferenceCell* ref =
        bench::find_reference(inst->to_string(), model->name(), to_string(cfg.heur),
                              to_string(cfg.goal));
    std::cout << "instance,model,heuristic,algorithm,goal,fails,nodes,solutions,time_ms,"
                 "ref_fails,delta\n";
    std::cout << inst->to_string() << ',' << model->name() << ',' << to_string(cfg.heur) << ','
              << to_string(cfg.algo) << ',' << to_string(cfg.goal) << ',' << stats.fails << ','
              << stats.nodes << ',' << stats.solutions << ','
              << static_cast<long>(stats.time_ms) << ',';
    if (ref)
        std::cout << ref->fails << ',' << stats.fails - ref->fails;
    else
        std::cout << ',';
    std::cout << '\n';

    if (args.print_solutions) {
        for (const Solution& s : sols) {
            bool first = true;
            for (int i = 0; i < p.primal_count(); ++i) {
                if (p.primal_role[static_cast<std::size_t>(i)] != VarRole::DecisionPrimal)
                    continue;
                if (!first) std::cout << ',';
                std::cout << s.primal[static_cast<std::size_t>(i)];
                first = false;
            }
            std::cout << '\n';
        }
    }
    if (stats.aborted) {
        std::cerr << "resource limit exceeded; partial statistics reported\n";
        return kExitLimit;
    }
    return kExitOk;
}

int run_verify_fixtures() {
    auto results = replay_fixtures();
    bool ok = true;
    std::cout << "fixture,level,model,expected,actual,status\n";
    for (const auto& r : results) {
        bool pass = r.ok();
        ok = ok && pass;
        std::cout << r.fixture << ',' << to_string(r.level) << ',' << ModelSpec{r.model}.name()
                  << ',' << (r.expected ? "true" : "false") << ','
                  << (r.actual ? "true" : "false") << ','
                  << (pass ? (r.reclassified ? "pass-reclassified" : "pass") : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitViolation;
}

int run_verify_lattice(int n, long samples, int threads) {
    LatticeOptions opts;
    opts.threads = threads;
    if (samples > 0) {
        opts.mode = SweepMode::Sample;
        opts.samples = samples;
        if (const char* seed = std::getenv("PERMUTA_SEED")) opts.seed = std::stoul(seed);
    }
    LatticeReport rep = verify_lattice(n, opts);
    std::cout << rep.to_csv();
    std::cerr << "checked " << rep.configs << " configurations, " << rep.violations.size()
              << " violations, " << rep.documented.size() << " documented deviations\n";
    return rep.ok() ? kExitOk : kExitViolation;
}

int run_verify_lockstep() {
    bool ok = true;
    std::cout << "problem,variant,fc_branches,dp_branches,fc_sat,dp_sat,status\n";
    auto report = [&](const std::string& name, const Problem& p, SatVariant v) {
        LockstepReport r = lockstep_compare(p, v);
        ok = ok && r.equal;
        std::cout << name << ','
                  << (v == SatVariant::PrimalSAT ? "primal" : "channelling") << ','
                  << r.fc_branches << ',' << r.dp_branches << ',' << r.fc_sat << ','
                  << r.dp_sat << ',' << (r.equal ? "equal" : r.divergence) << '\n';
    };
    for (auto [n, m] : {std::pair<int, int>{2, 3}, {2, 4}}) {
        std::string name = "langford:" + std::to_string(n) + "," + std::to_string(m);
        report(name, langford(n, m, ModelSpec{ModelFamily::Neq}), SatVariant::PrimalSAT);
        report(name, langford(n, m, ModelSpec{ModelFamily::C}), SatVariant::ChannellingSAT);
    }
    for (unsigned long seed = 1; seed <= 50; ++seed) {
        std::string name = "random5x5#" + std::to_string(seed);
        report(name, random_binary_permutation(5, 5, seed, ModelFamily::Neq),
               SatVariant::PrimalSAT);
        report(name, random_binary_permutation(5, 5, seed, ModelFamily::C),
               SatVariant::ChannellingSAT);
    }
    return ok ? kExitOk : kExitViolation;
}

int run_verify_dominance(const std::string& instance) {
    auto inst = parse_instance(instance);
    if (!inst) {
        std::cerr << "unknown instance: " << instance << '\n';
        return kExitUsage;
    }
    auto fails_of = [&](ModelFamily f, Algo a) {
        Problem p = build_instance(*inst, ModelSpec{f});
        SearchConfig cfg;
        cfg.algo = a;
        cfg.goal = Goal::FirstSolution;
        auto [sols, stats] = solve(p, cfg);
        return stats.fails;
    };
    long f_all, f_c, f_neq;
    if (inst->kind == "golomb") {
        f_all = fails_of(ModelFamily::InjAll, Algo::MGAC);
        f_c = fails_of(ModelFamily::InjC2, Algo::MAC);
        f_neq = fails_of(ModelFamily::InjNeq, Algo::MAC);
    } else {
        f_all = fails_of(ModelFamily::All, Algo::MGAC);
        f_c = fails_of(ModelFamily::C, Algo::MAC);
        f_neq = fails_of(ModelFamily::Neq, Algo::MAC);
    }
    bool ok = f_all <= f_c && f_c <= f_neq;
    std::cout << "instance,fails_alldiff,fails_channelling,fails_neq,status\n";
    std::cout << inst->to_string() << ',' << f_all << ',' << f_c << ',' << f_neq << ','
              << (ok ? "ordered" : "VIOLATED") << '\n';
    return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation and injection model benchmark runner"};
    app.require_subcommand(1);

    SolveArgs sargs;
    CLI::App* solve_cmd = app.add_subcommand("solve", "build and solve one instance");
    solve_cmd->add_option("--instance", sargs.instance, "instance string, e.g. langford:3,9")
        ->required();
    solve_cmd->add_option("--model", sargs.model, "permutation model tag");
    solve_cmd->add_option("--mode", sargs.mode, "injection model tag, e.g. injection-c2");
    solve_cmd->add_option("--heuristic", sargs.heuristic, "lex|sd_p|sd_d|sd_pd|sd2_p|sd2_d|sd2_pd");
    solve_cmd->add_option("--algorithm", sargs.algorithm, "auto|fc|mac|mgac");
    solve_cmd->add_option("--goal", sargs.goal, "first|all");
    solve_cmd->add_option("--time-limit", sargs.time_limit, "seconds before clean abort");
    solve_cmd->add_option("--node-limit", sargs.node_limit, "assignment attempts before abort");
    solve_cmd->add_flag("--no-symmetry-break", sargs.no_symmetry_break,
                        "disable the Langford reversal break");
    solve_cmd->add_flag("--print-solutions", sargs.print_solutions,
                        "emit one CSV row per solution");

    CLI::App* verify_cmd = app.add_subcommand("verify", "replay the verification suites");
    verify_cmd->require_subcommand(1);
    verify_cmd->add_subcommand("fixtures", "replay the stored proof instances");
    int lat_n = 3;
    long lat_samples = 0;
    int lat_threads = 0;
    CLI::App* lat = verify_cmd->add_subcommand("lattice", "sweep the strength lattice");
    lat->add_option("--n", lat_n, "permutation size (exhaustive needs n <= 4)");
    lat->add_option("--samples", lat_samples, "sample count (0 = exhaustive)");
    lat->add_option("--threads", lat_threads, "worker threads (0 = hardware)");
    verify_cmd->add_subcommand("lockstep", "forward checking versus DP branch counts");
    std::string dom_instance = "langford:2,4";
    CLI::App* dom = verify_cmd->add_subcommand("dominance", "model fail-count ordering");
    dom->add_option("--instance", dom_instance, "instance string");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(sargs);
        if (verify_cmd->parsed()) {
            if (verify_cmd->get_subcommand("fixtures")->parsed()) return run_verify_fixtures();
            if (verify_cmd->get_subcommand("lattice")->parsed())
                return run_verify_lattice(lat_n, lat_samples, lat_threads);
            if (verify_cmd->get_subcommand("lockstep")->parsed()) return run_verify_lockstep();
            if (verify_cmd->get_subcommand("dominance")->parsed())
                return run_verify_dominance(dom_instance);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
