#pragma once

#include <map>
#include <optional>
#include <string>

#include "qlab/instance.hpp"
#include "qlab/rng.hpp"

namespace qlab {

// Constants table charged by the emulated quantum subroutines.  `eps` is the
// per-subroutine error budget entering the log(1/eps) repetition factor;
// `inject` optionally turns on failure injection at that rate for the
// bounded-error primitives (exact primitives never fail).
struct QuantumConstants {
    double c_grover = 1.0;
    double c_exact = 1.0;
    double c_count = 1.0;
    double c_amplify = 1.0;
    double eps = 1e-4;
    double inject = 0.0;
};

struct CostLedger {
    double cost_units = 0.0;
    long long classical_queries = 0;
    std::map<std::string, double> breakdown;

    void charge(const std::string& label, double units) {
        breakdown[label] += units;
        cost_units += units;
    }
    void charge_classical(const std::string& label, long long count) {
        classical_queries += count;
        charge(label, static_cast<double>(count));
    }
    double breakdown_total() const {
        double sum = 0;
        for (const auto& [label, units] : breakdown) sum += units;
        return sum;
    }
};

struct PromiseViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmulatedOutcome {
    std::optional<long long> index;  // found element, when any
    bool failed = false;
    double charged = 0.0;
};

// Cost-charging emulations of the standard quantum subroutines.  Results are
// computed from ground truth; costs follow the stated query formulas.
class QuantumEmulator {
public:
    QuantumEmulator(const QuantumConstants& qc, CostLedger& ledger, Rng& rng)
        : qc_(qc), ledger_(ledger), rng_(rng) {}

    long long rep_factor() const;  // ceil(log2(1/eps))

    // Grover search with the promise of at least t_promise marked elements;
    // finds a uniformly random marked element, or reports none when the
    // marked set is empty (never a spurious index).  A nonempty search can
    // fail (miss) with probability `inject`.
    EmulatedOutcome grover_find(const std::string& label, long long domain,
                                const std::vector<long long>& marked, long long t_promise,
                                double per_eval_cost = 1.0);

    // Exact Grover under the promise that the marked count is exactly t or
    // zero: returns a marked element with certainty, or none with certainty.
    // Any other marked count throws PromiseViolation.
    EmulatedOutcome exact_grover(const std::string& label, long long domain,
                                 const std::vector<long long>& marked, long long t,
                                 double per_eval_cost = 1.0);

    // Approximate counting with relative accuracy 1/10; t = 0 is always
    // reported as 0.  Under injection the estimate is arbitrary with
    // probability `inject`.
    EmulatedOutcome approx_count(const std::string& label, long long domain, long long t_true);

    // Amplitude amplification of a subroutine with success probability
    // lower bound p: charges ceil(c_amplify/sqrt(p)) * rep calls, succeeds
    // whenever the true success probability reaches p (degraded
    // proportionally below that), and fails outright when it is zero.
    EmulatedOutcome amplify(const std::string& label, double p, double per_call_cost,
                            double true_success_prob);

    Rng& rng() { return rng_; }

private:
    const QuantumConstants& qc_;
    CostLedger& ledger_;
    Rng& rng_;
};

struct QRunResult {
    int output = 0;
    bool aborted = false;
    CostLedger ledger;

    long long queries() const { return ledger.classical_queries; }
    double cost() const { return ledger.cost_units; }
};

// Bounded-error drivers (correct with probability >= 9/10; exact ground
// truth when injection is off) and exact drivers (output always equals
// evaluate).
QRunResult run_Q_f(const GridInput& x, const QuantumConstants& qc, uint64_t seed);
QRunResult run_Q_h(const GridInput& x, const QuantumConstants& qc, uint64_t seed);
QRunResult run_QE_h(const GridInput& x, const QuantumConstants& qc, uint64_t seed);
QRunResult run_QE_g(const GridInput& x, const QuantumConstants& qc, uint64_t seed);

}  // namespace qlab
