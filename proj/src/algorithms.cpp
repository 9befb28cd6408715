#include "qlab/algorithms.hpp"

#include <algorithm>
#include <cmath>

namespace qlab {

namespace {

// Whether the subtree at `id` contains any leaf outside `marked_labels`.
bool subtree_has_open_leaf(const BalancedTree& tree, int id, const std::set<int>& marked_labels) {
    const auto& nd = tree.node(id);
    if (nd.leaf_label != 0) return !marked_labels.count(nd.leaf_label);
    return subtree_has_open_leaf(tree, nd.left, marked_labels) ||
           subtree_has_open_leaf(tree, nd.right, marked_labels);
}

struct TreeWalk {
    const std::function<CellEntry(CellRef)>& read;
    const BalancedTree& tree;
    const std::set<int>& marked_labels;
    Family family;
    int marked_col = 0;     // family f back-pointer target
    CellRef special{};      // family g back-pointer target
    std::set<int>* good = nullptr;

    bool visit(int id, CellRef cell) {
        const auto& nd = tree.node(id);
        if (nd.leaf_label != 0) {
            CellEntry e = read(cell);
            if (cell.col != nd.leaf_label || e.value != 0) return false;
            if (family == Family::F && !e.aux.is_col(marked_col)) return false;
            if (family == Family::G && good && e.aux.is_cell(special)) good->insert(nd.leaf_label);
            return true;
        }
        CellEntry e = read(cell);
        for (Dir d : {Dir::Left, Dir::Right}) {
            int child = d == Dir::Left ? nd.left : nd.right;
            if (!subtree_has_open_leaf(tree, child, marked_labels)) continue;
            const CellPtr& p = d == Dir::Left ? e.left : e.right;
            if (!p) return false;
            if (!visit(child, *p)) return false;
        }
        return true;
    }
};

}  // namespace

ColumnCheck check_marked_column(const std::function<CellEntry(CellRef)>& read, Family family,
                                int j, int n, int m, const BalancedTree& tree) {
    ColumnCheck out;

    // Condition 2 (and the all-1 requirement): a unique non-plain cell whose
    // value is 1.
    int specials = 0;
    for (int row = 1; row <= n; ++row) {
        CellEntry e = read(CellRef{row, j});
        if (!(e == plain_one())) {
            out.special = CellRef{row, j};
            ++specials;
        }
    }
    if (specials != 1) return out;
    if (read(out.special).value != 1) return out;

    std::set<int> marked_labels{j};
    TreeWalk walk{read, tree, marked_labels, family, j, out.special,
                  family == Family::G ? &out.good : nullptr};
    CellRef root_cell = out.special;
    if (m >= 2) {
        if (!walk.visit(tree.root(), root_cell)) return out;
    }
    if (family == Family::G && static_cast<int>(out.good.size()) != m / 2) return out;
    out.ok = true;
    return out;
}

bool check_tree_paths(const std::function<CellEntry(CellRef)>& read, const BalancedTree& tree,
                      CellRef root_cell, const std::set<int>& marked_labels) {
    if (!subtree_has_open_leaf(tree, tree.root(), marked_labels)) return true;
    TreeWalk walk{read, tree, marked_labels, Family::H, 0, CellRef{}, nullptr};
    return walk.visit(tree.root(), root_cell);
}

bool verify_column(Oracle& o, int j) {
    if (o.family() != Family::F && o.family() != Family::G)
        throw std::invalid_argument("verify_column: families f and g only");
    CachedReader reader(o);
    BalancedTree tree = build_tree(o.m());
    auto read = [&](CellRef c) { return reader.read(c); };
    return check_marked_column(read, o.family(), j, o.n(), o.m(), tree).ok;
}

bool test_column(CachedReader& reader, Rng& rng, int col, int k, double alpha_sample) {
    int n = reader.oracle().n();
    int m = reader.oracle().m();
    double want = alpha_sample * (static_cast<double>(n) / std::max(1, k)) *
                  std::log(static_cast<double>(n) * m);
    long long samples = static_cast<long long>(std::ceil(want));
    if (samples >= n) {
        // A full scan answers exactly at the same cost cap.
        for (int row = 1; row <= n; ++row)
            if (reader.read(CellRef{row, col}).value == 0) return false;
        return true;
    }
    for (long long s = 0; s < samples; ++s) {
        int row = static_cast<int>(rng.below(static_cast<uint64_t>(n))) + 1;
        if (reader.read(CellRef{row, col}).value == 0) return false;
    }
    return true;
}

RunResult run_R0_f(Oracle& o, const AlgoConfig& cfg) {
    if (o.family() != Family::F) throw std::invalid_argument("run_R0_f: family f oracle required");
    const int n = o.n();
    const int m = o.m();
    long long start = o.queries();
    CachedReader reader(o);
    Rng rng(Rng::mix(cfg.seed, 0x72306621ULL));
    BalancedTree tree = build_tree(m);
    auto read = [&](CellRef c) { return reader.read(c); };

    auto finish = [&](int output, bool aborted = false) {
        return RunResult{output, o.queries() - start, aborted};
    };

    int j = 1;
    int k = n;
    while (true) {
        // 2(a): read column j in full; verify it when it is all ones.
        int zeroes = 0;
        for (int row = 1; row <= n; ++row)
            if (reader.read(CellRef{row, j}).value == 0) ++zeroes;
        if (zeroes == 0)
            return finish(check_marked_column(read, Family::F, j, n, m, tree).ok ? 1 : 0);

        // 2(b): too many zeroes for the current budget; read everything and
        // answer exactly.
        if (zeroes > k) {
            for (int row = 1; row <= n; ++row)
                for (int col = 1; col <= m; ++col) reader.read(CellRef{row, col});
            return finish(evaluate(reader.snapshot_full()));
        }

        // 2(c): test every column named by a back pointer of a zero.
        std::set<int> candidates;
        for (int row = 1; row <= n; ++row) {
            CellEntry e = reader.read(CellRef{row, j});
            if (e.value == 0 && e.aux.kind == AuxPtr::Kind::Col) candidates.insert(e.aux.col);
        }
        int next = -1;
        for (int c : candidates) {
            bool outcome = test_column(reader, rng, c, k, cfg.alpha_sample);
            if (outcome && next < 0) next = c;
        }
        if (next < 0) return finish(0);
        j = next;

        // 2(d)
        if (k == 0) return finish(0);
        k /= 2;
    }
}

RunResult run_good_column(Oracle& o, int j0) {
    if (o.family() != Family::G)
        throw std::invalid_argument("run_good_column: family g oracle required");
    const int n = o.n();
    const int m = o.m();
    long long start = o.queries();
    CachedReader reader(o);
    BalancedTree tree = build_tree(m);
    auto read = [&](CellRef c) { return reader.read(c); };
    auto finish = [&](int output) { return RunResult{output, o.queries() - start, false}; };

    std::set<int> candidate_rows;  // I: rows of column j0 that may host the leaf
    for (int row = 1; row <= n; ++row) candidate_rows.insert(row);
    std::set<int> open_columns;  // B: potentially marked columns
    for (int col = 1; col <= m; ++col) open_columns.insert(col);

    long long iterations = 0;
    while (!candidate_rows.empty() && open_columns.size() >= 2) {
        if (++iterations > static_cast<long long>(n) + m + 1)
            throw std::logic_error("run_good_column: loop failed to make progress");
        int i = *candidate_rows.begin();
        CellEntry e = reader.read(CellRef{i, j0});
        if (e.aux.kind != AuxPtr::Kind::Cell) {
            candidate_rows.erase(i);
            continue;
        }
        CellRef a = e.aux.cell;

        int target = 0;
        for (int col : open_columns) {
            if (col != a.col) {
                target = col;
                break;
            }
        }
        // |B| >= 2 guarantees a column avoiding a's column exists.
        CellRef cur = a;
        bool broken = false;
        for (Dir d : tree_path(tree, target)) {
            CellEntry t = reader.read(cur);
            const CellPtr& p = d == Dir::Left ? t.left : t.right;
            if (!p) {
                broken = true;
                break;
            }
            cur = *p;
        }
        if (!broken && cur.col == target && reader.read(cur).value == 0) {
            open_columns.erase(target);
        } else {
            candidate_rows.erase(i);
        }
    }

    if (open_columns.size() >= 2) return finish(0);
    int b = *open_columns.begin();
    ColumnCheck check = check_marked_column(read, Family::G, b, n, m, tree);
    if (!check.ok) return finish(0);
    return finish(check.good.count(j0) ? 1 : 0);
}

RunResult run_R1_g(Oracle& o, const AlgoConfig& cfg) {
    if (o.family() != Family::G) throw std::invalid_argument("run_R1_g: family g oracle required");
    Rng rng(Rng::mix(cfg.seed, 0x72316721ULL));
    long long start = o.queries();
    for (int rep = 0; rep < std::max(1, cfg.max_reps); ++rep) {
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(o.m()))) + 1;
        RunResult trial = run_good_column(o, j);
        if (trial.output == 1) return RunResult{1, o.queries() - start, false};
    }
    return RunResult{0, o.queries() - start, false};
}

}  // namespace qlab
