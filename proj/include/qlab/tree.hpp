#pragma once

#include <vector>

#include "qlab/rational.hpp"

namespace qlab {

enum class Dir : uint8_t { Left, Right };

using DirectionSeq = std::vector<Dir>;

// The canonical balanced oriented binary tree with m leaves and m-1 internal
// vertices.  For m = 2^k it is the complete tree of depth k; otherwise the
// complete tree on 2^k leaves (2^k < m < 2^{k+1}) with a pair of children
// added to each of its m - 2^k leftmost leaves.  Leaves carry labels 1..m
// assigned left to right.
class BalancedTree {
public:
    struct Node {
        int parent = -1;
        int left = -1;
        int right = -1;
        int depth = 0;
        int subtree = 1;     // nodes in the subtree rooted here, inclusive
        int leaf_label = 0;  // 1..m for leaves, 0 for internal nodes
    };

    int leaf_count() const { return m_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int internal_count() const { return node_count() - m_; }
    int root() const { return 0; }

    const Node& node(int id) const { return nodes_[static_cast<size_t>(id)]; }
    bool is_leaf(int id) const { return node(id).leaf_label != 0; }
    int leaf_node(int label) const { return leaf_of_label_[static_cast<size_t>(label)]; }

    friend BalancedTree build_tree(int m);

private:
    int m_ = 0;
    std::vector<Node> nodes_;
    std::vector<int> leaf_of_label_;  // label (1-based) -> node id
};

BalancedTree build_tree(int m);

// Root-to-leaf direction sequence for leaf label j; length = depth of the leaf.
DirectionSeq tree_path(const BalancedTree& t, int leaf_label);

// (sum of subtree sizes over marked nodes) / |marked|, exact.
Rational expected_subtree_size(const BalancedTree& t, const std::vector<int>& marked_nodes);

}  // namespace qlab
