#include "qlab/potential.hpp"

#include <algorithm>
#include <cmath>

#include "qlab/tree.hpp"

namespace qlab {

PotentialTracker PotentialTracker::g_lower(const GridInput& hard_negative) {
    HardSampleG h = hard_negative_zero_rows(hard_negative);  // throws on mismatch
    PotentialTracker t;
    t.variant_ = PotentialVariant::GLower;
    t.n_ = hard_negative.n;
    t.m_ = hard_negative.m;
    t.weight_ = 2.0 / t.n_;
    t.zero_row_ = h.zero_row;
    t.col_queries_.assign(static_cast<size_t>(t.m_) + 1, 0);
    t.direct_.assign(static_cast<size_t>(t.m_) + 1, false);
    t.compromised_.assign(static_cast<size_t>(t.m_) + 1, false);
    return t;
}

PotentialTracker PotentialTracker::h1_lower(const HardSampleH1& sample, int n, int m, double c0) {
    if (static_cast<int>(sample.leaf_row.size()) != m + 1 ||
        static_cast<int>(sample.internal_row.size()) != m + 1)
        throw std::invalid_argument("PotentialTracker: sample does not match dimensions");
    PotentialTracker t;
    t.variant_ = PotentialVariant::H1Lower;
    t.n_ = n;
    t.m_ = m;
    t.c0_ = c0;
    t.weight_ = 4.0 * c0 * std::log2(static_cast<double>(m)) / n;
    t.leaf_row_ = sample.leaf_row;
    t.internal_row_ = sample.internal_row;

    BalancedTree tree = build_tree(m);
    t.node_of_col_.assign(static_cast<size_t>(m) + 1, -1);
    for (int id = 0; id < tree.node_count(); ++id) {
        if (tree.is_leaf(id)) continue;
        t.node_of_col_[static_cast<size_t>(sample.node_column[static_cast<size_t>(id)])] = id;
    }
    // Columns dragged down when a column's internal node is hit: every column
    // hosting a node in its subtree.
    t.subtree_cols_.assign(static_cast<size_t>(m) + 1, {});
    for (int col = 1; col <= m; ++col) {
        int u = t.node_of_col_[static_cast<size_t>(col)];
        if (u < 0) continue;
        std::vector<int> stack{u};
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            if (!tree.is_leaf(id)) {
                t.subtree_cols_[static_cast<size_t>(col)].push_back(
                    sample.node_column[static_cast<size_t>(id)]);
                stack.push_back(tree.node(id).left);
                stack.push_back(tree.node(id).right);
            }
        }
    }
    t.col_queries_.assign(static_cast<size_t>(m) + 1, 0);
    t.direct_.assign(static_cast<size_t>(m) + 1, false);
    t.compromised_.assign(static_cast<size_t>(m) + 1, false);
    return t;
}

void PotentialTracker::compromise(int col) {
    if (compromised_[static_cast<size_t>(col)]) return;
    compromised_[static_cast<size_t>(col)] = true;
    a_ += 1;
    b_ -= col_queries_[static_cast<size_t>(col)];
}

void PotentialTracker::direct_compromise(int col) {
    if (direct_[static_cast<size_t>(col)]) return;
    direct_[static_cast<size_t>(col)] = true;
    compromise(col);
    if (variant_ == PotentialVariant::H1Lower) {
        for (int dragged : subtree_cols_[static_cast<size_t>(col)]) compromise(dragged);
    }
}

double PotentialTracker::step(CellRef c) {
    if (c.row < 1 || c.row > n_ || c.col < 1 || c.col > m_)
        throw std::invalid_argument("PotentialTracker: query outside the grid");
    if (!seen_.insert(c).second) return potential();

    int col = c.col;
    col_queries_[static_cast<size_t>(col)] += 1;
    if (!compromised_[static_cast<size_t>(col)]) b_ += 1;

    bool hit = variant_ == PotentialVariant::GLower
                   ? c.row == zero_row_[static_cast<size_t>(col)]
                   : (c.row == leaf_row_[static_cast<size_t>(col)] ||
                      c.row == internal_row_[static_cast<size_t>(col)]);
    bool half = 2 * col_queries_[static_cast<size_t>(col)] > n_;
    if (hit || half) direct_compromise(col);
    return potential();
}

double PotentialTracker::potential() const {
    double raw = static_cast<double>(a_) + weight_ * static_cast<double>(b_);
    if (variant_ == PotentialVariant::H1Lower) return std::min(raw, m_ / 2.0);
    return raw;
}

double PotentialTracker::bound_per_step() const {
    if (variant_ == PotentialVariant::GLower) return 4.0 / n_;
    return 8.0 * c0_ * std::log2(static_cast<double>(m_)) / n_;
}

}  // namespace qlab
