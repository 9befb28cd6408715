#include "qlab/adversary.hpp"

#include <algorithm>
#include <set>

#include "qlab/tree.hpp"

namespace qlab {

AdversaryState::AdversaryState(int n, int m)
    : n_(n), m_(m), per_column_(static_cast<size_t>(m) + 1, 0) {
    if (m < 1 || n <= m)
        throw std::invalid_argument("AdversaryState: requires n > m >= 1");
}

CellEntry AdversaryState::answer(CellRef c) {
    if (!cell_in_grid(c, n_, m_))
        throw std::invalid_argument("AdversaryState: query outside the grid");
    auto it = answered_.find(c);
    if (it != answered_.end()) return it->second;

    int k = ++per_column_[static_cast<size_t>(c.col)];
    CellEntry e;
    if (k <= m_) {
        e = plain_one();
    } else {
        e = plain_zero();
        e.aux = AuxPtr::to_col((k - m_ - 1) % m_ + 1);
    }
    answered_.emplace(c, e);
    transcript_.push_back({c, e});
    return e;
}

std::optional<CellEntry> AdversaryState::answered(CellRef c) const {
    auto it = answered_.find(c);
    if (it == answered_.end()) return std::nullopt;
    return it->second;
}

void check_adversary_transcript(const QueryTranscript& t, int n, int m) {
    AdversaryState replay(n, m);
    for (const auto& rec : t) {
        if (replay.answered(rec.cell))
            throw InconsistentTranscript("transcript repeats a cell");
        CellEntry expected = replay.answer(rec.cell);
        if (!(expected == rec.entry))
            throw InconsistentTranscript("transcript answer differs from the adversary's");
    }
}

GridInput complete_to_negative(const QueryTranscript& t, int n, int m) {
    check_adversary_transcript(t, n, m);
    GridInput x = GridInput::blank(Family::F, n, m, 1);
    for (auto& e : x.cells) e = plain_zero();
    for (const auto& rec : t) x.at(rec.cell) = rec.entry;
    return x;
}

std::optional<GridInput> complete_to_positive(const QueryTranscript& t, int n, int m) {
    check_adversary_transcript(t, n, m);

    std::vector<int> queried(static_cast<size_t>(m) + 1, 0);
    std::set<CellRef> queried_cells;
    for (const auto& rec : t) {
        queried[static_cast<size_t>(rec.cell.col)] += 1;
        queried_cells.insert(rec.cell);
    }

    long long unqueried_total = static_cast<long long>(n) * m - static_cast<long long>(t.size());
    int b = 0;
    for (int j = 1; j <= m; ++j) {
        if (queried[static_cast<size_t>(j)] <= m) {
            b = j;
            break;
        }
    }
    if (b == 0 || unqueried_total < 4LL * m) return std::nullopt;

    GridInput x = GridInput::blank(Family::F, n, m, 1);
    for (const auto& rec : t) x.at(rec.cell) = rec.entry;

    auto unqueried_in_column = [&](int col) -> std::vector<CellRef> {
        std::vector<CellRef> cells;
        for (int row = 1; row <= n; ++row) {
            CellRef c{row, col};
            if (!queried_cells.count(c)) cells.push_back(c);
        }
        return cells;
    };

    // Highlighted zeroes: a fresh cell when the column has one, otherwise the
    // adversary already produced a zero pointing at b.
    std::vector<CellRef> leaf_cell(static_cast<size_t>(m) + 1, CellRef{});
    std::set<CellRef> used;
    for (int j = 1; j <= m; ++j) {
        if (j == b) continue;
        auto open = unqueried_in_column(j);
        if (!open.empty()) {
            CellEntry e = plain_zero();
            e.aux = AuxPtr::to_col(b);
            x.at(open.front()) = e;
            leaf_cell[static_cast<size_t>(j)] = open.front();
        } else {
            CellRef hit{};
            bool found = false;
            for (int row = 1; row <= n && !found; ++row) {
                const CellEntry& e = x.at(row, j);
                if (e.value == 0 && e.aux.is_col(b)) {
                    hit = CellRef{row, j};
                    found = true;
                }
            }
            if (!found) return std::nullopt;  // cannot happen for n >= 2m
            leaf_cell[static_cast<size_t>(j)] = hit;
        }
        used.insert(leaf_cell[static_cast<size_t>(j)]);
    }

    // Special element: the lowest unqueried cell of column b.
    auto open_b = unqueried_in_column(b);
    if (open_b.empty()) return std::nullopt;
    CellRef a = open_b.front();
    used.insert(a);

    // Internal tree nodes on lowest-index-first unqueried cells outside
    // column b and the leaf set.
    BalancedTree tree = build_tree(m);
    std::vector<int> internal_nodes;
    for (int id = 0; id < tree.node_count(); ++id)
        if (!tree.is_leaf(id) && id != tree.root()) internal_nodes.push_back(id);

    std::vector<CellRef> hosts;
    for (int row = 1; row <= n && hosts.size() < internal_nodes.size(); ++row) {
        for (int col = 1; col <= m && hosts.size() < internal_nodes.size(); ++col) {
            CellRef c{row, col};
            if (col == b || queried_cells.count(c) || used.count(c)) continue;
            hosts.push_back(c);
            used.insert(c);
        }
    }
    if (hosts.size() < internal_nodes.size()) return std::nullopt;

    std::vector<CellRef> cell_of_node(static_cast<size_t>(tree.node_count()), CellRef{});
    cell_of_node[static_cast<size_t>(tree.root())] = a;
    for (size_t i = 0; i < internal_nodes.size(); ++i)
        cell_of_node[static_cast<size_t>(internal_nodes[i])] = hosts[i];
    for (int label = 1; label <= m; ++label)
        if (label != b)
            cell_of_node[static_cast<size_t>(tree.leaf_node(label))] =
                leaf_cell[static_cast<size_t>(label)];

    auto child_ptr = [&](int child) -> CellPtr {
        if (tree.node(child).leaf_label == b) return std::nullopt;
        return cell_of_node[static_cast<size_t>(child)];
    };

    for (int id : internal_nodes) {
        CellEntry e = plain_zero();
        e.left = child_ptr(tree.node(id).left);
        e.right = child_ptr(tree.node(id).right);
        x.at(cell_of_node[static_cast<size_t>(id)]) = e;
    }
    CellEntry root_entry = plain_one();
    if (m >= 2) {
        root_entry.left = child_ptr(tree.node(tree.root()).left);
        root_entry.right = child_ptr(tree.node(tree.root()).right);
    } else {
        root_entry.aux = AuxPtr::to_col(b);
    }
    x.at(a) = root_entry;

    // Everything else, including the rest of column b, stays (1,null,null,null).
    return x;
}

}  // namespace qlab
