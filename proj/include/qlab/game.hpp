#pragma once

#include <string>

#include "qlab/adversary.hpp"
#include "qlab/potential.hpp"

namespace qlab {

// Built-in query strategies.  column_major / row_major / random_order are
// oblivious cell orders; derandomized_alg1 replays the Las Vegas algorithm
// with a fixed seed against the adversary and then exhausts the rest of the
// grid in row-major order.
std::vector<CellRef> strategy_order(const std::string& name, int n, int m, uint64_t seed);

const std::vector<std::string>& adversary_strategies();
const std::vector<std::string>& potential_strategies();

struct AdversaryGameReport {
    int n = 0;
    int m = 0;
    std::string strategy;
    long long steps_played = 0;
    long long undetermined_through = 0;   // largest t with both completions valid
    long long first_infeasible = -1;      // first t where the positive completion fails
    bool completions_validated = false;   // every completion re-checked by evaluate
    GridInput last_negative_witness;
    GridInput last_positive_witness;
};

// Plays a strategy against the adversary, attempting both completions after
// every query and validating them with evaluate.
AdversaryGameReport play_adversary_game(const std::string& strategy, int n, int m,
                                        uint64_t seed);

struct PotentialReport {
    PotentialVariant variant = PotentialVariant::GLower;
    int n = 0;
    int m = 0;
    std::string strategy;
    long long samples = 0;
    long long steps = 0;
    double bound = 0;            // 4/n or 8 C0 log2(m) / n
    double max_step_mean = 0;    // max over t of the sample mean of I_{t+1}-I_t
    double stderr_at_max = 0;
    double initial_potential = 0;  // I_0, identically zero
    bool within_bound = false;   // mean_t <= bound + 3 stderr_t for every t
};

PotentialReport run_potential_experiment(PotentialVariant variant, int n, int m,
                                         const std::string& strategy, long long samples,
                                         long long steps, uint64_t seed, double c0);

}  // namespace qlab
