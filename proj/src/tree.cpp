#include "qlab/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlab {

namespace {

// Builds a complete subtree with `leaves` leaves (a power of two) and returns
// its root id.  `extend_left` counts how many of the leftmost base leaves
// still need a pair of children attached below them.
int build_complete(std::vector<BalancedTree::Node>& nodes, int leaves, int& extend_left) {
    int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    if (leaves == 1) {
        if (extend_left > 0) {
            --extend_left;
            int l = static_cast<int>(nodes.size());
            nodes.emplace_back();
            int r = static_cast<int>(nodes.size());
            nodes.emplace_back();
            nodes[static_cast<size_t>(id)].left = l;
            nodes[static_cast<size_t>(id)].right = r;
            nodes[static_cast<size_t>(l)].parent = id;
            nodes[static_cast<size_t>(r)].parent = id;
        }
        return id;
    }
    int l = build_complete(nodes, leaves / 2, extend_left);
    int r = build_complete(nodes, leaves / 2, extend_left);
    nodes[static_cast<size_t>(id)].left = l;
    nodes[static_cast<size_t>(id)].right = r;
    nodes[static_cast<size_t>(l)].parent = id;
    nodes[static_cast<size_t>(r)].parent = id;
    return id;
}

}  // namespace

BalancedTree build_tree(int m) {
    if (m < 1) throw std::invalid_argument("build_tree: m must be >= 1");

    BalancedTree t;
    t.m_ = m;

    int base = 1;
    while (base * 2 <= m) base *= 2;
    int extend = m - base;  // leftmost base leaves receiving children

    // Depth-first construction makes node 0 the root; children of the
    // leftmost base leaves are created right where they attach, so an
    // in-order sweep over leaves yields the left-to-right label order.
    build_complete(t.nodes_, base, extend);

    t.leaf_of_label_.assign(static_cast<size_t>(m) + 1, -1);
    int next_label = 0;
    // Iterative in-order traversal assigning labels and depths.
    struct Item {
        int id;
        int depth;
    };
    std::vector<Item> stack{{0, 0}};
    // Depths via a separate pass: parent links exist, so compute directly.
    for (size_t i = 0; i < t.nodes_.size(); ++i) {
        auto& nd = t.nodes_[i];
        nd.depth = nd.parent < 0 ? 0 : t.nodes_[static_cast<size_t>(nd.parent)].depth + 1;
    }
    // Label leaves left to right.
    stack.assign(1, {0, 0});
    std::vector<int> order;
    order.reserve(t.nodes_.size());
    // Standard DFS that pushes right child first so left subtrees come first.
    while (!stack.empty()) {
        int id = stack.back().id;
        stack.pop_back();
        auto& nd = t.nodes_[static_cast<size_t>(id)];
        if (nd.left < 0) {
            nd.leaf_label = ++next_label;
            t.leaf_of_label_[static_cast<size_t>(next_label)] = id;
        } else {
            stack.push_back({nd.right, 0});
            stack.push_back({nd.left, 0});
        }
    }

    // Subtree sizes bottom-up (children have larger ids than parents here is
    // NOT guaranteed by the builder, so accumulate over a reverse DFS order).
    std::vector<int> dfs{0};
    order.clear();
    while (!dfs.empty()) {
        int id = dfs.back();
        dfs.pop_back();
        order.push_back(id);
        const auto& nd = t.nodes_[static_cast<size_t>(id)];
        if (nd.left >= 0) {
            dfs.push_back(nd.left);
            dfs.push_back(nd.right);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto& nd = t.nodes_[static_cast<size_t>(*it)];
        nd.subtree = 1;
        if (nd.left >= 0) {
            nd.subtree += t.nodes_[static_cast<size_t>(nd.left)].subtree +
                          t.nodes_[static_cast<size_t>(nd.right)].subtree;
        }
    }
    return t;
}

DirectionSeq tree_path(const BalancedTree& t, int leaf_label) {
    if (leaf_label < 1 || leaf_label > t.leaf_count())
        throw std::invalid_argument("tree_path: leaf label out of range");
    DirectionSeq path;
    int id = t.leaf_node(leaf_label);
    while (t.node(id).parent >= 0) {
        int p = t.node(id).parent;
        path.push_back(t.node(p).left == id ? Dir::Left : Dir::Right);
        id = p;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Rational expected_subtree_size(const BalancedTree& t, const std::vector<int>& marked_nodes) {
    if (marked_nodes.empty())
        throw std::invalid_argument("expected_subtree_size: empty marked set");
    long long sum = 0;
    for (int id : marked_nodes) {
        if (id < 0 || id >= t.node_count())
            throw std::invalid_argument("expected_subtree_size: node id out of range");
        sum += t.node(id).subtree;
    }
    return Rational(sum, static_cast<long long>(marked_nodes.size()));
}

}  // namespace qlab
