#pragma once

#include <functional>
#include <map>
#include <set>

#include "qlab/oracle.hpp"
#include "qlab/rng.hpp"
#include "qlab/tree.hpp"

namespace qlab {

struct AlgoConfig {
    double alpha_sample = 4.0;  // constant inside TestColumn's sample count
    int max_reps = 1;           // amplification rounds of the one-sided driver
    uint64_t seed = 0;
};

struct RunResult {
    int output = 0;
    long long queries = 0;
    bool aborted = false;
};

// Shared column verification: reads column j, requires a unique special
// element with value 1, then walks the pointer tree rooted there, reading
// each tree cell once.  For family f every leaf must back-point to column j;
// for family g the good set is collected and must have size exactly m/2.
struct ColumnCheck {
    bool ok = false;
    CellRef special{};
    std::set<int> good;  // family g only
};

ColumnCheck check_marked_column(const std::function<CellEntry(CellRef)>& read, Family family,
                                int j, int n, int m, const BalancedTree& tree);

// Tree-condition check from a given root cell against an arbitrary marked
// label set (used by family h drivers); leaves with marked labels are
// dropped from the walk.
bool check_tree_paths(const std::function<CellEntry(CellRef)>& read, const BalancedTree& tree,
                      CellRef root_cell, const std::set<int>& marked_labels);

// VerifyColumn of the Las Vegas algorithm: accepts iff column j is marked.
// Never accepts a negative input.
bool verify_column(Oracle& o, int j);

// TestColumn(c, k): True whenever the column has no zeroes; a column with
// more than k/2 zeroes fails with probability >= 1 - 1/(nm)^2 for the
// calibrated alpha_sample.  Samples ceil(alpha * (n/k) * ln(n m)) cells with
// replacement, switching to a full scan once that reaches n.
bool test_column(CachedReader& reader, Rng& rng, int col, int k, double alpha_sample);

// Algorithm 1: zero-error evaluation of family f instances.
RunResult run_R0_f(Oracle& o, const AlgoConfig& cfg);

// Algorithm 3: deterministic test of whether column j is good (family g).
RunResult run_good_column(Oracle& o, int j);

// One-sided-error driver: each trial tests a uniformly random column for
// goodness; positives accept with probability exactly 1/2 per trial,
// negatives never accept.
RunResult run_R1_g(Oracle& o, const AlgoConfig& cfg);

}  // namespace qlab
