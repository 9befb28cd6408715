#include "qlab/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qlab/algorithms.hpp"

namespace qlab {

const std::vector<std::string>& adversary_strategies() {
    static const std::vector<std::string> names{"column_major", "row_major", "random_order",
                                                "derandomized_alg1"};
    return names;
}

const std::vector<std::string>& potential_strategies() {
    static const std::vector<std::string> names{"column_major", "row_major", "random_order"};
    return names;
}

std::vector<CellRef> strategy_order(const std::string& name, int n, int m, uint64_t seed) {
    std::vector<CellRef> order;
    order.reserve(static_cast<size_t>(n) * static_cast<size_t>(m));
    if (name == "column_major") {
        for (int col = 1; col <= m; ++col)
            for (int row = 1; row <= n; ++row) order.push_back(CellRef{row, col});
        return order;
    }
    if (name == "row_major") {
        for (int row = 1; row <= n; ++row)
            for (int col = 1; col <= m; ++col) order.push_back(CellRef{row, col});
        return order;
    }
    if (name == "random_order") {
        for (int row = 1; row <= n; ++row)
            for (int col = 1; col <= m; ++col) order.push_back(CellRef{row, col});
        Rng rng(Rng::mix(seed, 0x6f726421ULL));
        rng.shuffle(order);
        return order;
    }
    if (name == "derandomized_alg1") {
        // The Las Vegas algorithm's query order against the adversary, with
        // its sampling seeded, then the unqueried remainder.
        AdversaryOracle oracle(n, m);
        AlgoConfig cfg;
        cfg.seed = seed;
        run_R0_f(oracle, cfg);
        std::set<CellRef> seen;
        for (const auto& rec : oracle.transcript()) {
            order.push_back(rec.cell);
            seen.insert(rec.cell);
        }
        for (int row = 1; row <= n; ++row)
            for (int col = 1; col <= m; ++col) {
                CellRef c{row, col};
                if (!seen.count(c)) order.push_back(c);
            }
        return order;
    }
    throw std::invalid_argument("unknown strategy: " + name);
}

AdversaryGameReport play_adversary_game(const std::string& strategy, int n, int m,
                                        uint64_t seed) {
    AdversaryGameReport report;
    report.n = n;
    report.m = m;
    report.strategy = strategy;

    std::vector<CellRef> order = strategy_order(strategy, n, m, seed);
    AdversaryState adv(n, m);
    report.completions_validated = true;

    for (const CellRef& c : order) {
        adv.answer(c);
        ++report.steps_played;

        GridInput negative = complete_to_negative(adv.transcript(), n, m);
        if (evaluate(negative) != 0) report.completions_validated = false;

        auto positive = complete_to_positive(adv.transcript(), n, m);
        if (!positive) {
            report.first_infeasible = report.steps_played;
            break;
        }
        if (evaluate(*positive) != 1) report.completions_validated = false;

        report.undetermined_through = report.steps_played;
        report.last_negative_witness = negative;
        report.last_positive_witness = *positive;
    }
    return report;
}

PotentialReport run_potential_experiment(PotentialVariant variant, int n, int m,
                                         const std::string& strategy, long long samples,
                                         long long steps, uint64_t seed, double c0) {
    if (steps <= 0) steps = static_cast<long long>(n) * m;
    std::vector<CellRef> order = strategy_order(strategy, n, m, seed);
    steps = std::min(steps, static_cast<long long>(order.size()));

    PotentialReport report;
    report.variant = variant;
    report.n = n;
    report.m = m;
    report.strategy = strategy;
    report.samples = samples;
    report.steps = steps;

    std::vector<double> sum(static_cast<size_t>(steps), 0.0);
    std::vector<double> sum_sq(static_cast<size_t>(steps), 0.0);
    double initial = 0.0;

    for (long long s = 0; s < samples; ++s) {
        uint64_t sample_seed = Rng::mix(seed, 0x706f7421ULL + static_cast<uint64_t>(s));
        PotentialTracker tracker =
            variant == PotentialVariant::GLower
                ? PotentialTracker::g_lower(sample_hard_negative(Family::G, n, m, sample_seed))
                : PotentialTracker::h1_lower(sample_hard_h1(n, m, sample_seed).second, n, m, c0);
        double before = tracker.potential();
        initial = std::max(initial, std::abs(before));
        for (long long t = 0; t < steps; ++t) {
            double after = tracker.step(order[static_cast<size_t>(t)]);
            double inc = after - before;
            sum[static_cast<size_t>(t)] += inc;
            sum_sq[static_cast<size_t>(t)] += inc * inc;
            before = after;
        }
    }

    report.initial_potential = initial;
    report.bound = variant == PotentialVariant::GLower
                       ? 4.0 / n
                       : 8.0 * c0 * std::log2(static_cast<double>(m)) / n;
    report.within_bound = true;
    for (long long t = 0; t < steps; ++t) {
        double mean = sum[static_cast<size_t>(t)] / static_cast<double>(samples);
        double var = sum_sq[static_cast<size_t>(t)] / static_cast<double>(samples) - mean * mean;
        double se = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
        if (mean > report.max_step_mean) {
            report.max_step_mean = mean;
            report.stderr_at_max = se;
        }
        if (mean > report.bound + 3.0 * se) report.within_bound = false;
    }
    return report;
}

}  // namespace qlab
