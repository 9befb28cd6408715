#include "qlab/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qlab/config.hpp"
#include "qlab/game.hpp"
#include "qlab/instance.hpp"
#include "qlab/measures.hpp"
#include "qlab/quantum.hpp"

namespace qlab {

namespace {

std::string format_cost(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Writes either to --out or to stdout.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Family family_for_algorithm(const std::string& algo) {
    if (algo == "r0_f" || algo == "q_f") return Family::F;
    if (algo == "r1_g" || algo == "good_col" || algo == "qe_g") return Family::G;
    if (algo == "q_h" || algo == "qe_h") return Family::H;
    throw std::runtime_error("unknown algorithm id: " + algo);
}

struct TrialRow {
    int output = 0;
    int truth = 0;
    long long queries = 0;
    double cost = 0;
};

TrialRow run_trial(const std::string& algo, const GridInput& x, const LabConfig& cfg,
                   uint64_t seed, int reps, double inject) {
    TrialRow row;
    row.truth = evaluate(x);
    if (algo == "r0_f") {
        CountingOracle o(x);
        RunResult r = run_R0_f(o, cfg.algo(seed));
        row = {r.output, row.truth, r.queries, static_cast<double>(r.queries)};
    } else if (algo == "r1_g") {
        CountingOracle o(x);
        RunResult r = run_R1_g(o, cfg.algo(seed, reps));
        row = {r.output, row.truth, r.queries, static_cast<double>(r.queries)};
    } else if (algo == "good_col") {
        Rng rng(Rng::mix(seed, 0x636f6c21ULL));
        int probe = static_cast<int>(rng.below(static_cast<uint64_t>(x.m))) + 1;
        CountingOracle o(x);
        RunResult r = run_good_column(o, probe);
        std::vector<int> goods = good_columns(x);
        int truth = std::count(goods.begin(), goods.end(), probe) ? 1 : 0;
        row = {r.output, truth, r.queries, static_cast<double>(r.queries)};
    } else if (algo == "q_f" || algo == "q_h" || algo == "qe_h" || algo == "qe_g") {
        QuantumConstants qc = cfg.quantum(inject);
        QRunResult r = algo == "q_f"    ? run_Q_f(x, qc, seed)
                       : algo == "q_h"  ? run_Q_h(x, qc, seed)
                       : algo == "qe_h" ? run_QE_h(x, qc, seed)
                                        : run_QE_g(x, qc, seed);
        row = {r.output, row.truth, r.queries(), r.cost()};
    } else {
        throw std::runtime_error("unknown algorithm id: " + algo);
    }
    return row;
}

struct SizeSpec {
    int n = 0;
    int m = 0;
    int k = 1;
};

SizeSpec parse_size(const std::string& text) {
    SizeSpec s;
    char extra = 0;
    int fields = std::sscanf(text.c_str(), "%d,%d,%d%c", &s.n, &s.m, &s.k, &extra);
    if (fields == 2) {
        s.k = 1;
        return s;
    }
    if (fields == 3) return s;
    throw std::runtime_error("bad --size '" + text + "': expected n,m or n,m,k");
}

GridInput make_instance(Family family, const SizeSpec& size, const std::string& sign,
                        long long trial, uint64_t seed, GarbageMode garbage) {
    bool positive = sign == "pos" || (sign == "mix" && trial % 2 == 0);
    if (positive) return generate_positive(family, size.n, size.m, size.k, seed, garbage);
    return sample_hard_negative(family, size.n, size.m, seed, size.k);
}

int cmd_sweep(const std::string& algo, const std::vector<SizeSpec>& sizes, int trials,
              const std::string& sign, uint64_t base_seed, int reps, double inject,
              GarbageMode garbage, const LabConfig& cfg, std::ostream& out) {
    Family family = family_for_algorithm(algo);
    out << "family,n,m,k,seed,trial,algorithm,output,truth,queries,cost_units\n";
    for (const SizeSpec& size : sizes) {
        uint64_t size_seed = Rng::mix(base_seed, static_cast<uint64_t>(size.n) * 1000003ULL +
                                                     static_cast<uint64_t>(size.m) * 1009ULL +
                                                     static_cast<uint64_t>(size.k));
        for (int trial = 0; trial < trials; ++trial) {
            uint64_t seed = Rng::mix(size_seed, static_cast<uint64_t>(trial));
            GridInput x = make_instance(family, size, sign, trial, seed, garbage);
            TrialRow row = run_trial(algo, x, cfg, seed, reps, inject);
            out << family_name(family) << ',' << size.n << ',' << size.m << ',' << size.k << ','
                << seed << ',' << trial << ',' << algo << ',' << row.output << ',' << row.truth
                << ',' << row.queries << ',' << format_cost(row.cost) << '\n';
        }
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"query-complexity laboratory for grid pointer functions"};
    app.require_subcommand(1);

    std::string config_path;
    uint64_t seed = 1;
    std::string out_path;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--seed", seed, "base seed");
    app.add_option("--out", out_path, "output file (default stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_family = "f", gen_sign = "pos", gen_garbage = "clean";
    int gen_n = 0, gen_m = 0, gen_k = 1;
    gen->add_option("--family", gen_family, "gpw|f|g|h")->required();
    gen->add_option("--n", gen_n, "rows")->required();
    gen->add_option("--m", gen_m, "columns")->required();
    gen->add_option("--k", gen_k, "marked columns (family h)");
    gen->add_option("--sign", gen_sign, "pos|neg|h1");
    gen->add_option("--garbage", gen_garbage, "clean|random");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an instance file");
    std::string eval_path;
    eval_cmd->add_option("file", eval_path, "instance file")->required();

    // run / sweep
    auto* run = app.add_subcommand("run", "run an algorithm at one size");
    auto* sweep = app.add_subcommand("sweep", "run an algorithm over a size list");
    std::string algo, sign = "mix";
    int trials = 1, reps = 1;
    double inject = 0.0;
    std::string run_garbage = "clean";
    int run_n = 0, run_m = 0, run_k = 1;
    std::vector<std::string> size_texts;
    for (CLI::App* cmd : {run, sweep}) {
        cmd->add_option("--algo", algo, "r0_f|r1_g|good_col|q_f|q_h|qe_h|qe_g")->required();
        cmd->add_option("--trials", trials, "trials per size");
        cmd->add_option("--sign", sign, "pos|neg|mix");
        cmd->add_option("--reps", reps, "amplification rounds (r1_g)");
        cmd->add_option("--inject", inject, "failure injection rate for quantum drivers");
        cmd->add_option("--garbage", run_garbage, "clean|random");
    }
    run->add_option("--n", run_n, "rows")->required();
    run->add_option("--m", run_m, "columns")->required();
    run->add_option("--k", run_k, "marked columns (family h)");
    sweep->add_option("--size", size_texts, "size n,m[,k]; repeatable")->required();

    // adversary
    auto* adv = app.add_subcommand("adversary", "play a strategy against the adversary");
    std::string adv_strategy = "column_major";
    int adv_m = 0, adv_n = 0;
    std::string witness_prefix;
    adv->add_option("--strategy", adv_strategy, "column_major|row_major|random_order|derandomized_alg1");
    adv->add_option("--m", adv_m, "columns")->required();
    adv->add_option("--n", adv_n, "rows (default 2m)");
    adv->add_option("--witness-out", witness_prefix, "write last witnesses to PREFIX.neg/.pos");

    // potential
    auto* pot = app.add_subcommand("potential", "estimate potential increments on a hard distribution");
    std::string pot_variant = "g", pot_strategy = "column_major";
    int pot_n = 0, pot_m = 0;
    long long pot_samples = 10000, pot_steps = 0;
    pot->add_option("--variant", pot_variant, "g|h1");
    pot->add_option("--n", pot_n, "rows")->required();
    pot->add_option("--m", pot_m, "columns")->required();
    pot->add_option("--strategy", pot_strategy, "column_major|row_major|random_order");
    pot->add_option("--samples", pot_samples, "hard-distribution samples");
    pot->add_option("--steps", pot_steps, "queries per sample (default n*m)");

    // measure
    auto* measure = app.add_subcommand("measure", "exact measures of a truth-table file");
    std::string measure_path;
    measure->add_option("file", measure_path, "truth table file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        LabConfig cfg = config_path.empty() ? LabConfig{} : LabConfig::load(config_path);

        if (app.got_subcommand(gen)) {
            Family family = family_from_name(gen_family);
            GarbageMode garbage =
                gen_garbage == "random" ? GarbageMode::Random : GarbageMode::Clean;
            GridInput x;
            if (gen_sign == "pos") {
                x = generate_positive(family, gen_n, gen_m, gen_k, seed, garbage);
            } else if (gen_sign == "neg") {
                x = sample_hard_negative(family, gen_n, gen_m, seed, gen_k);
            } else if (gen_sign == "h1") {
                if (family != Family::H || gen_k != 1)
                    throw std::runtime_error("--sign h1 requires --family h with k = 1");
                x = sample_hard_h1(gen_n, gen_m, seed).first;
            } else {
                throw std::runtime_error("unknown --sign: " + gen_sign);
            }
            OutputSink sink(out_path);
            write_instance(sink.stream(), x);
            return 0;
        }

        if (app.got_subcommand(eval_cmd)) {
            std::ifstream in(eval_path);
            if (!in) throw std::runtime_error("cannot open instance file: " + eval_path);
            GridInput x = read_instance(in);
            OutputSink sink(out_path);
            sink.stream() << evaluate(x) << '\n';
            return 0;
        }

        if (app.got_subcommand(run) || app.got_subcommand(sweep)) {
            std::vector<SizeSpec> sizes;
            if (app.got_subcommand(run)) {
                sizes.push_back(SizeSpec{run_n, run_m, run_k});
            } else {
                for (const std::string& text : size_texts) sizes.push_back(parse_size(text));
            }
            GarbageMode garbage =
                run_garbage == "random" ? GarbageMode::Random : GarbageMode::Clean;
            OutputSink sink(out_path);
            return cmd_sweep(algo, sizes, trials, sign, seed, reps, inject, garbage, cfg,
                             sink.stream());
        }

        if (app.got_subcommand(adv)) {
            int n = adv_n > 0 ? adv_n : 2 * adv_m;
            AdversaryGameReport report = play_adversary_game(adv_strategy, n, adv_m, seed);
            OutputSink sink(out_path);
            auto& out = sink.stream();
            out << "strategy=" << report.strategy << " n=" << report.n << " m=" << report.m
                << '\n';
            out << "steps_played=" << report.steps_played << '\n';
            out << "undetermined_through=" << report.undetermined_through << '\n';
            out << "first_positive_infeasible=" << report.first_infeasible << '\n';
            out << "completions_validated=" << (report.completions_validated ? 1 : 0) << '\n';
            long long target = static_cast<long long>(adv_m) * adv_m - 1;
            out << "undetermined_through_m2_minus_1="
                << (report.undetermined_through >= target ? 1 : 0) << '\n';
            if (!witness_prefix.empty() && report.undetermined_through > 0) {
                std::ofstream neg(witness_prefix + ".neg", std::ios::binary);
                write_instance(neg, report.last_negative_witness);
                std::ofstream pos(witness_prefix + ".pos", std::ios::binary);
                write_instance(pos, report.last_positive_witness);
            }
            return 0;
        }

        if (app.got_subcommand(pot)) {
            PotentialVariant variant =
                pot_variant == "h1" ? PotentialVariant::H1Lower : PotentialVariant::GLower;
            if (pot_variant != "g" && pot_variant != "h1")
                throw std::runtime_error("unknown --variant: " + pot_variant);
            PotentialReport report = run_potential_experiment(variant, pot_n, pot_m, pot_strategy,
                                                              pot_samples, pot_steps, seed, cfg.c0);
            OutputSink sink(out_path);
            auto& out = sink.stream();
            out << "variant=" << (variant == PotentialVariant::GLower ? "g" : "h1") << " n=" << pot_n
                << " m=" << pot_m << " strategy=" << report.strategy << '\n';
            out << "samples=" << report.samples << " steps=" << report.steps << '\n';
            out << "initial_potential=" << format_cost(report.initial_potential) << '\n';
            out << "max_step_mean=" << format_cost(report.max_step_mean) << '\n';
            out << "stderr_at_max=" << format_cost(report.stderr_at_max) << '\n';
            out << "bound=" << format_cost(report.bound) << '\n';
            out << "within_bound=" << (report.within_bound ? 1 : 0) << '\n';
            return 0;
        }

        if (app.got_subcommand(measure)) {
            std::ifstream in(measure_path);
            if (!in) throw std::runtime_error("cannot open truth table file: " + measure_path);
            TruthTable f = TruthTable::read(in);
            OutputSink sink(out_path);
            auto& out = sink.stream();
            out << "D=" << exact_D(f) << '\n';
            out << "C0=" << certificate_complexity(f, 0) << '\n';
            out << "C1=" << certificate_complexity(f, 1) << '\n';
            if (f.alphabet == 2) out << "deg=" << degree(f) << '\n';
            return 0;
        }
    } catch (const SizeBoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::runtime_error& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << '\n';
        if (what.find("parse error") != std::string::npos ||
            what.find("cannot open") != std::string::npos)
            return 2;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args);
}

}  // namespace qlab
