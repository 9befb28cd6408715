#pragma once

#include <set>

#include "qlab/instance.hpp"

namespace qlab {

enum class PotentialVariant { GLower, H1Lower };

// Tracks the progress potential I_t of the randomized lower bounds.
//
// GLower (hidden input from the one-zero-per-column hard distribution):
//   a column is compromised once its zero was found or more than n/2 of its
//   cells were queried; I_t = A_t + (2/n) B_t.
//
// H1Lower (hidden input from the h_{1,n,m} hard distribution): a column is
// additionally compromised when one of its two special cells was queried, or
// when an ancestor of its internal tree node sits in a directly compromised
// column; I_t = min{A_t + (4 C0 log2(m) / n) B_t, m/2}.
class PotentialTracker {
public:
    static PotentialTracker g_lower(const GridInput& hard_negative);
    static PotentialTracker h1_lower(const HardSampleH1& sample, int n, int m, double c0);

    // Processes one query and returns the updated I_t.  Repeated cells are
    // no-ops (decision trees never re-query).
    double step(CellRef c);

    double potential() const;
    long long compromised_columns() const { return a_; }
    long long outside_queries() const { return b_; }
    PotentialVariant variant() const { return variant_; }
    double bound_per_step() const;  // 4/n or 8 C0 log2(m) / n

private:
    PotentialTracker() = default;

    void compromise(int col);
    void direct_compromise(int col);

    PotentialVariant variant_ = PotentialVariant::GLower;
    int n_ = 0;
    int m_ = 0;
    double weight_ = 0;  // coefficient of B_t
    double c0_ = 0;

    std::vector<int> zero_row_;      // GLower: row of the hidden zero per column
    std::vector<int> leaf_row_;      // H1Lower
    std::vector<int> internal_row_;  // H1Lower
    std::vector<int> node_of_col_;   // H1Lower: internal tree node hosted per column, -1 if none
    std::vector<std::vector<int>> subtree_cols_;  // H1Lower: columns compromised by a direct hit

    std::vector<long long> col_queries_;
    std::vector<bool> direct_;
    std::vector<bool> compromised_;
    std::set<CellRef> seen_;
    long long a_ = 0;
    long long b_ = 0;
};

}  // namespace qlab
