#include "qlab/instance.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace qlab {

namespace {

bool is_marked_column(const GridInput& x, int col) {
    for (int row = 1; row <= x.n; ++row)
        if (x.at(row, col).value != 1) return false;
    return true;
}

// Cells visited after `start` when following `dirs`; nullopt if a pointer on
// the way is null.
std::optional<std::vector<CellRef>> follow_path(const GridInput& x, CellRef start,
                                                const DirectionSeq& dirs) {
    std::vector<CellRef> visited;
    CellRef cur = start;
    for (Dir d : dirs) {
        const CellEntry& e = x.at(cur);
        const CellPtr& p = d == Dir::Left ? e.left : e.right;
        if (!p) return std::nullopt;
        cur = *p;
        visited.push_back(cur);
    }
    return visited;
}

int evaluate_gpw(const GridInput& x, int b, CellRef a) {
    // Condition 3: the pointer chain from the special element visits one zero
    // in every column except the marked one.
    std::vector<bool> seen(static_cast<size_t>(x.m) + 1, false);
    CellRef cur = a;
    for (int s = 1; s <= x.m - 1; ++s) {
        const AuxPtr& p = x.at(cur).aux;
        if (p.kind != AuxPtr::Kind::Cell) return 0;
        cur = p.cell;
        if (x.at(cur).value != 0) return 0;
        if (cur.col == b || seen[static_cast<size_t>(cur.col)]) return 0;
        seen[static_cast<size_t>(cur.col)] = true;
    }
    return 1;
}

int evaluate_tree_family(const GridInput& x, int b, CellRef a, const BalancedTree& tree) {
    int good = 0;
    for (int j = 1; j <= x.m; ++j) {
        if (j == b) continue;
        auto visited = follow_path(x, a, tree_path(tree, j));
        if (!visited) return 0;
        CellRef leaf = visited->back();
        if (leaf.col != j || x.at(leaf).value != 0) return 0;
        const AuxPtr& back = x.at(leaf).aux;
        if (x.family == Family::F) {
            if (!back.is_col(b)) return 0;  // condition 4
        } else if (x.family == Family::G) {
            if (back.is_cell(a)) ++good;
        }
    }
    if (x.family == Family::G && good != x.m / 2) return 0;  // condition 4'
    return 1;
}

int evaluate_h(const GridInput& x, const std::vector<int>& marked, const BalancedTree& tree) {
    if (static_cast<int>(marked.size()) != x.k) return 0;

    // Condition 2: a unique special element in each marked column.
    std::vector<CellRef> specials;
    std::set<CellRef> special_set;
    for (int b : marked) {
        CellRef found{};
        int count = 0;
        for (int row = 1; row <= x.n; ++row) {
            if (!(x.at(row, b) == plain_one())) {
                found = CellRef{row, b};
                ++count;
            }
        }
        if (count != 1) return 0;
        specials.push_back(found);
        special_set.insert(found);
    }

    // Condition 3: the internal pointers permute the specials in one k-cycle,
    // and all specials share the same left and right pointers.
    CellRef start = specials.front();
    for (CellRef s : specials) {
        if (x.at(s).left != x.at(start).left) return 0;
        if (x.at(s).right != x.at(start).right) return 0;
    }
    std::set<CellRef> visited{start};
    CellRef cur = start;
    for (int step = 1; step < x.k; ++step) {
        const AuxPtr& p = x.at(cur).aux;
        if (p.kind != AuxPtr::Kind::Cell) return 0;
        cur = p.cell;
        if (!special_set.count(cur) || visited.count(cur)) return 0;
        visited.insert(cur);
    }
    if (!x.at(cur).aux.is_cell(start)) return 0;

    // Condition 4: tree paths from a special land on zeroes, one per
    // non-marked column.
    std::set<int> marked_set(marked.begin(), marked.end());
    for (int j = 1; j <= x.m; ++j) {
        if (marked_set.count(j)) continue;
        auto path = follow_path(x, start, tree_path(tree, j));
        if (!path) return 0;
        CellRef leaf = path->back();
        if (leaf.col != j || x.at(leaf).value != 0) return 0;
    }
    return 1;
}

}  // namespace

GridInput GridInput::blank(Family family, int n, int m, int k) {
    GridInput x;
    x.family = family;
    x.n = n;
    x.m = m;
    x.k = k;
    x.cells.assign(static_cast<size_t>(n) * static_cast<size_t>(m), plain_one());
    return x;
}

bool GridInput::well_formed(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (n < 1 || m < 1) return fail("grid dimensions must be positive");
    if (cells.size() != static_cast<size_t>(n) * static_cast<size_t>(m))
        return fail("cell array does not cover the grid");
    if (family == Family::G && m % 2 != 0) return fail("family g requires even m");
    if (family == Family::H) {
        if (k < 1 || k >= m) return fail("family h requires 1 <= k < m");
    } else if (k != 1) {
        return fail("k must be 1 outside family h");
    }
    for (const CellEntry& e : cells)
        if (!entry_matches_family(e, family, n, m)) return fail("cell violates family schema");
    return true;
}

bool Certificate::fixes(CellRef c) const {
    for (const auto& [cell, entry] : fixed)
        if (cell == c) return true;
    return false;
}

std::vector<int> all_one_columns(const GridInput& x) {
    std::vector<int> cols;
    for (int j = 1; j <= x.m; ++j)
        if (is_marked_column(x, j)) cols.push_back(j);
    return cols;
}

int evaluate(const GridInput& x) {
    std::string why;
    if (!x.well_formed(&why)) throw std::invalid_argument("evaluate: " + why);

    std::vector<int> marked = all_one_columns(x);

    if (x.family == Family::H) {
        BalancedTree tree = build_tree(x.m);
        return evaluate_h(x, marked, tree);
    }

    // Condition 1: exactly one all-1 column.
    if (marked.size() != 1) return 0;
    int b = marked.front();

    // Condition 2: a unique special element in the marked column.
    CellRef a{};
    int specials = 0;
    for (int row = 1; row <= x.n; ++row) {
        if (!(x.at(row, b) == plain_one())) {
            a = CellRef{row, b};
            ++specials;
        }
    }
    if (specials != 1) return 0;

    if (x.family == Family::Gpw) return evaluate_gpw(x, b, a);
    BalancedTree tree = build_tree(x.m);
    return evaluate_tree_family(x, b, a, tree);
}

namespace {

CellPtr child_pointer(const BalancedTree& tree, int child,
                      const std::vector<CellRef>& cell_of_node,
                      const std::set<int>& dropped_labels) {
    const auto& nd = tree.node(child);
    if (nd.leaf_label != 0 && dropped_labels.count(nd.leaf_label)) return std::nullopt;
    return cell_of_node[static_cast<size_t>(child)];
}

void randomize_garbage(GridInput& x, const std::vector<bool>& fixed, Rng& rng) {
    auto random_cell = [&] {
        return CellRef{static_cast<int>(rng.below(static_cast<uint64_t>(x.n))) + 1,
                       static_cast<int>(rng.below(static_cast<uint64_t>(x.m))) + 1};
    };
    for (int row = 1; row <= x.n; ++row) {
        for (int col = 1; col <= x.m; ++col) {
            CellRef c{row, col};
            if (fixed[x.index(c)]) continue;
            CellEntry& e = x.at(c);
            if (x.family != Family::Gpw) {
                e.left = rng.coin() ? CellPtr{random_cell()} : CellPtr{};
                e.right = rng.coin() ? CellPtr{random_cell()} : CellPtr{};
            }
            if (x.family == Family::F) {
                e.aux = rng.coin()
                            ? AuxPtr::to_col(static_cast<int>(rng.below(static_cast<uint64_t>(x.m))) + 1)
                            : AuxPtr::null();
            } else {
                e.aux = rng.coin() ? AuxPtr::to_cell(random_cell()) : AuxPtr::null();
            }
        }
    }
}

}  // namespace

GridInput generate_positive(Family family, int n, int m, int k, uint64_t seed,
                            GarbageMode garbage) {
    if (family != Family::H) k = 1;
    if (m < 1) throw std::invalid_argument("generate_positive: m must be >= 1");
    if (family == Family::G && m % 2 != 0)
        throw std::invalid_argument("generate_positive: family g requires even m");
    if (family == Family::H && (k < 1 || k >= m))
        throw std::invalid_argument("generate_positive: family h requires 1 <= k < m");
    // The marked columns, the leaves and the internal tree nodes must all fit.
    long long hosted = static_cast<long long>(m - k) + std::max(0, m - 2);
    if (n < 2 || static_cast<long long>(n) * m < static_cast<long long>(k) * n + hosted)
        throw InfeasibleDims("generate_positive: grid too small to host the construction");

    Rng rng(Rng::mix(seed, 0x67656e21ULL));
    GridInput x = GridInput::blank(family, n, m, k);
    std::vector<bool> fixed(x.cells.size(), false);
    auto set_cell = [&](CellRef c, const CellEntry& e) {
        x.at(c) = e;
        fixed[x.index(c)] = true;
    };

    // Marked columns and their special elements.
    std::vector<int> marked_cols;
    for (long long idx : rng.distinct(m, k)) marked_cols.push_back(static_cast<int>(idx) + 1);
    std::sort(marked_cols.begin(), marked_cols.end());
    std::set<int> marked_set(marked_cols.begin(), marked_cols.end());
    std::vector<CellRef> specials;
    for (int b : marked_cols) {
        int row = static_cast<int>(rng.below(static_cast<uint64_t>(n))) + 1;
        specials.push_back(CellRef{row, b});
        for (int r = 1; r <= n; ++r) set_cell(CellRef{r, b}, plain_one());
    }

    // One highlighted zero per non-marked column.
    std::vector<CellRef> leaf_cell(static_cast<size_t>(m) + 1, CellRef{});
    std::vector<int> open_cols;
    for (int j = 1; j <= m; ++j) {
        if (marked_set.count(j)) continue;
        open_cols.push_back(j);
        int row = static_cast<int>(rng.below(static_cast<uint64_t>(n))) + 1;
        leaf_cell[static_cast<size_t>(j)] = CellRef{row, j};
    }

    if (family == Family::Gpw) {
        CellRef a = specials.front();
        std::vector<int> order = open_cols;
        rng.shuffle(order);
        CellEntry special_entry = plain_one();
        special_entry.aux = order.empty() ? AuxPtr::to_cell(a)
                                          : AuxPtr::to_cell(leaf_cell[static_cast<size_t>(order[0])]);
        set_cell(a, special_entry);
        for (size_t i = 0; i < order.size(); ++i) {
            CellEntry e = plain_zero();
            if (i + 1 < order.size())
                e.aux = AuxPtr::to_cell(leaf_cell[static_cast<size_t>(order[i + 1])]);
            set_cell(leaf_cell[static_cast<size_t>(order[i])], e);
        }
        if (garbage == GarbageMode::Random) randomize_garbage(x, fixed, rng);
        return x;
    }

    BalancedTree tree = build_tree(m);

    // Hosting cells for the internal nodes other than the root: anywhere
    // outside the marked columns that is not a leaf cell.
    std::vector<CellRef> free_cells;
    for (int j : open_cols)
        for (int row = 1; row <= n; ++row)
            if (row != leaf_cell[static_cast<size_t>(j)].row) free_cells.push_back(CellRef{row, j});

    std::vector<int> internal_nodes;
    for (int id = 0; id < tree.node_count(); ++id)
        if (!tree.is_leaf(id) && id != tree.root()) internal_nodes.push_back(id);

    std::vector<CellRef> cell_of_node(static_cast<size_t>(tree.node_count()), CellRef{});
    for (int label = 1; label <= m; ++label)
        if (!marked_set.count(label))
            cell_of_node[static_cast<size_t>(tree.leaf_node(label))] = leaf_cell[static_cast<size_t>(label)];
    auto picks = rng.distinct(static_cast<long long>(free_cells.size()),
                              static_cast<long long>(internal_nodes.size()));
    for (size_t i = 0; i < internal_nodes.size(); ++i)
        cell_of_node[static_cast<size_t>(internal_nodes[i])] = free_cells[static_cast<size_t>(picks[i])];

    CellRef root_host = specials.front();
    if (family != Family::H) cell_of_node[static_cast<size_t>(tree.root())] = root_host;

    // Internal non-root nodes: value 0, tree pointers, null aux.
    for (int id : internal_nodes) {
        const auto& nd = tree.node(id);
        CellEntry e = plain_zero();
        e.left = child_pointer(tree, nd.left, cell_of_node, marked_set);
        e.right = child_pointer(tree, nd.right, cell_of_node, marked_set);
        set_cell(cell_of_node[static_cast<size_t>(id)], e);
    }

    // Root entry / special elements.
    CellPtr root_left, root_right;
    if (m >= 2) {
        root_left = child_pointer(tree, tree.node(tree.root()).left, cell_of_node, marked_set);
        root_right = child_pointer(tree, tree.node(tree.root()).right, cell_of_node, marked_set);
    }
    if (family == Family::H) {
        std::vector<CellRef> cycle = specials;
        rng.shuffle(cycle);
        for (size_t s = 0; s < cycle.size(); ++s) {
            CellEntry e = plain_one();
            e.left = root_left;
            e.right = root_right;
            e.aux = AuxPtr::to_cell(cycle[(s + 1) % cycle.size()]);
            set_cell(cycle[s], e);
        }
    } else {
        CellEntry e = plain_one();
        e.left = root_left;
        e.right = root_right;
        if (m == 1) {
            // Degenerate tree: the root is the dropped leaf, so the special
            // element must differ from (1,null,null,null) through its aux slot.
            e.aux = family == Family::F ? AuxPtr::to_col(marked_cols.front())
                                        : AuxPtr::to_cell(root_host);
        }
        set_cell(root_host, e);
    }

    // Leaves.
    std::vector<int> good;
    if (family == Family::G) {
        auto idx = rng.distinct(static_cast<long long>(open_cols.size()), m / 2);
        for (long long i : idx) good.push_back(open_cols[static_cast<size_t>(i)]);
        std::sort(good.begin(), good.end());
    }
    std::set<int> good_set(good.begin(), good.end());
    for (int j : open_cols) {
        CellEntry e = plain_zero();
        if (family == Family::F) {
            e.aux = AuxPtr::to_col(marked_cols.front());
        } else if (family == Family::G) {
            if (good_set.count(j)) {
                e.aux = AuxPtr::to_cell(root_host);
            } else if (rng.coin()) {
                // A non-good leaf may point anywhere except the special element.
                CellRef target;
                do {
                    target = CellRef{static_cast<int>(rng.below(static_cast<uint64_t>(n))) + 1,
                                     static_cast<int>(rng.below(static_cast<uint64_t>(m))) + 1};
                } while (target == root_host);
                e.aux = AuxPtr::to_cell(target);
            }
        }
        set_cell(leaf_cell[static_cast<size_t>(j)], e);
    }

    if (garbage == GarbageMode::Random) randomize_garbage(x, fixed, rng);
    return x;
}

GridInput sample_hard_negative(Family family, int n, int m, uint64_t seed, int k) {
    if (n < 1 || m < 1) throw std::invalid_argument("sample_hard_negative: bad dimensions");
    Rng rng(Rng::mix(seed, 0x6e656721ULL));
    GridInput x = GridInput::blank(family, n, m, family == Family::H ? k : 1);
    for (int j = 1; j <= m; ++j) {
        int row = static_cast<int>(rng.below(static_cast<uint64_t>(n))) + 1;
        x.at(row, j) = plain_zero();
    }
    return x;
}

HardSampleG hard_negative_zero_rows(const GridInput& x) {
    HardSampleG h;
    h.zero_row.assign(static_cast<size_t>(x.m) + 1, 0);
    for (int j = 1; j <= x.m; ++j) {
        for (int row = 1; row <= x.n; ++row) {
            if (x.at(row, j).value == 0) {
                if (h.zero_row[static_cast<size_t>(j)] != 0)
                    throw std::invalid_argument("hard_negative_zero_rows: column with two zeroes");
                h.zero_row[static_cast<size_t>(j)] = row;
            }
        }
        if (h.zero_row[static_cast<size_t>(j)] == 0)
            throw std::invalid_argument("hard_negative_zero_rows: column without a zero");
    }
    return h;
}

std::pair<GridInput, HardSampleH1> sample_hard_h1(int n, int m, uint64_t seed) {
    if (n < 2 || m < 2) throw InfeasibleDims("sample_hard_h1: need n >= 2 and m >= 2");
    Rng rng(Rng::mix(seed, 0x68316821ULL));
    BalancedTree tree = build_tree(m);

    HardSampleH1 h;
    h.v = rng.coin() ? 1 : 0;
    h.node_column.assign(static_cast<size_t>(tree.node_count()), 0);
    h.leaf_row.assign(static_cast<size_t>(m) + 1, 0);
    h.internal_row.assign(static_cast<size_t>(m) + 1, 0);

    std::vector<int> cols(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) cols[static_cast<size_t>(j)] = j + 1;
    rng.shuffle(cols);
    size_t next_col = 0;
    for (int id = 0; id < tree.node_count(); ++id)
        if (!tree.is_leaf(id)) h.node_column[static_cast<size_t>(id)] = cols[next_col++];
    h.root_column = h.node_column[static_cast<size_t>(tree.root())];

    for (int j = 1; j <= m; ++j) {
        int leaf = static_cast<int>(rng.below(static_cast<uint64_t>(n))) + 1;
        int internal = static_cast<int>(rng.below(static_cast<uint64_t>(n - 1))) + 1;
        if (internal >= leaf) ++internal;  // uniform over rows distinct from the leaf row
        h.leaf_row[static_cast<size_t>(j)] = leaf;
        h.internal_row[static_cast<size_t>(j)] = internal;
    }

    GridInput x = GridInput::blank(Family::H, n, m, 1);
    auto node_cell = [&](int id) -> CellRef {
        const auto& nd = tree.node(id);
        if (nd.leaf_label != 0)
            return CellRef{h.leaf_row[static_cast<size_t>(nd.leaf_label)], nd.leaf_label};
        int col = h.node_column[static_cast<size_t>(id)];
        return CellRef{h.internal_row[static_cast<size_t>(col)], col};
    };

    for (int j = 1; j <= m; ++j) {
        if (j == h.root_column) continue;  // the root's leaf is removed
        x.at(h.leaf_row[static_cast<size_t>(j)], j) = plain_zero();
    }
    for (int id = 0; id < tree.node_count(); ++id) {
        if (tree.is_leaf(id)) continue;
        const auto& nd = tree.node(id);
        CellEntry e = plain_zero();
        auto link = [&](int child) -> CellPtr {
            const auto& cn = tree.node(child);
            if (cn.leaf_label == h.root_column) return std::nullopt;  // removed leaf
            return node_cell(child);
        };
        e.left = link(nd.left);
        e.right = link(nd.right);
        if (id == tree.root()) {
            e.value = static_cast<uint8_t>(h.v);
            e.aux = AuxPtr::to_cell(node_cell(id));  // internal pointer to itself
        }
        x.at(node_cell(id)) = e;
    }
    return {x, h};
}

Certificate extract_certificate(const GridInput& x) {
    if (evaluate(x) != 1) throw NotPositive("extract_certificate: input evaluates to 0");

    std::vector<bool> in_cert(x.cells.size(), false);
    std::vector<int> marked = all_one_columns(x);
    std::set<int> marked_set(marked.begin(), marked.end());
    for (int b : marked)
        for (int row = 1; row <= x.n; ++row) in_cert[x.index(CellRef{row, b})] = true;

    // The special element of the lowest marked column roots every path.
    CellRef a{};
    for (int row = 1; row <= x.n; ++row) {
        if (!(x.at(row, marked.front()) == plain_one())) {
            a = CellRef{row, marked.front()};
            break;
        }
    }

    if (x.family == Family::Gpw) {
        CellRef cur = a;
        for (int s = 1; s <= x.m - 1; ++s) {
            cur = x.at(cur).aux.cell;
            in_cert[x.index(cur)] = true;
        }
    } else {
        BalancedTree tree = build_tree(x.m);
        for (int j = 1; j <= x.m; ++j) {
            if (marked_set.count(j)) continue;
            auto path = follow_path(x, a, tree_path(tree, j));
            for (CellRef c : *path) in_cert[x.index(c)] = true;
        }
        if (x.family == Family::H) {
            // The internal-pointer cycle lives inside the marked columns,
            // already covered in full.
        }
    }

    Certificate cert;
    for (int row = 1; row <= x.n; ++row)
        for (int col = 1; col <= x.m; ++col) {
            CellRef c{row, col};
            if (in_cert[x.index(c)]) cert.fixed.emplace_back(c, x.at(c));
        }
    return cert;
}

GridInput random_completion(const Certificate& cert, Family family, int n, int m, int k,
                            Rng& rng) {
    GridInput x = GridInput::blank(family, n, m, k);
    auto random_cell = [&] {
        return CellRef{static_cast<int>(rng.below(static_cast<uint64_t>(n))) + 1,
                       static_cast<int>(rng.below(static_cast<uint64_t>(m))) + 1};
    };
    for (auto& e : x.cells) {
        e.value = rng.coin() ? 1 : 0;
        if (family != Family::Gpw) {
            e.left = rng.coin() ? CellPtr{random_cell()} : CellPtr{};
            e.right = rng.coin() ? CellPtr{random_cell()} : CellPtr{};
        }
        if (family == Family::F) {
            e.aux = rng.coin() ? AuxPtr::to_col(static_cast<int>(rng.below(static_cast<uint64_t>(m))) + 1)
                               : AuxPtr::null();
        } else {
            e.aux = rng.coin() ? AuxPtr::to_cell(random_cell()) : AuxPtr::null();
        }
    }
    for (const auto& [cell, entry] : cert.fixed) x.at(cell) = entry;
    return x;
}

std::vector<int> good_columns(const GridInput& x) {
    if (x.family != Family::G) throw std::invalid_argument("good_columns: family g only");
    if (evaluate(x) != 1) return {};
    int b = all_one_columns(x).front();
    CellRef a{};
    for (int row = 1; row <= x.n; ++row) {
        if (!(x.at(row, b) == plain_one())) {
            a = CellRef{row, b};
            break;
        }
    }
    BalancedTree tree = build_tree(x.m);
    std::vector<int> good;
    for (int j = 1; j <= x.m; ++j) {
        if (j == b) continue;
        auto path = follow_path(x, a, tree_path(tree, j));
        if (path && x.at(path->back()).aux.is_cell(a)) good.push_back(j);
    }
    return good;
}

namespace {

void write_cell_ptr(std::ostream& out, const CellPtr& p) {
    if (!p) {
        out << '-';
    } else {
        out << p->row << ',' << p->col;
    }
}

struct ParseCursor {
    std::istream& in;
    int line = 0;

    std::string next_line() {
        std::string s;
        while (std::getline(in, s)) {
            ++line;
            if (!s.empty() && s.back() == '\r') s.pop_back();
            if (!s.empty()) return s;
        }
        throw std::runtime_error("instance parse error: unexpected end of file");
    }
};

CellPtr parse_cell_ptr(const std::string& tok, int n, int m) {
    if (tok == "-") return std::nullopt;
    size_t comma = tok.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error("instance parse error: expected r,c or - but got '" + tok + "'");
    int row = std::stoi(tok.substr(0, comma));
    int col = std::stoi(tok.substr(comma + 1));
    CellRef c{row, col};
    if (!cell_in_grid(c, n, m))
        throw std::runtime_error("instance parse error: pointer target outside the grid");
    return c;
}

}  // namespace

void write_instance(std::ostream& out, const GridInput& x) {
    out << family_name(x.family) << ' ' << x.n << ' ' << x.m << ' ' << x.k << '\n';
    for (int row = 1; row <= x.n; ++row) {
        for (int col = 1; col <= x.m; ++col) {
            const CellEntry& e = x.at(row, col);
            out << row << ' ' << col << ' ' << static_cast<int>(e.value) << ' ';
            write_cell_ptr(out, e.left);
            out << ' ';
            write_cell_ptr(out, e.right);
            out << ' ';
            switch (e.aux.kind) {
                case AuxPtr::Kind::Null: out << '-'; break;
                case AuxPtr::Kind::Col: out << e.aux.col; break;
                case AuxPtr::Kind::Cell: out << e.aux.cell.row << ',' << e.aux.cell.col; break;
            }
            out << '\n';
        }
    }
}

GridInput read_instance(std::istream& in) {
    ParseCursor cur{in};
    std::istringstream header(cur.next_line());
    std::string fam;
    int n = 0, m = 0, k = 0;
    if (!(header >> fam >> n >> m >> k))
        throw std::runtime_error("instance parse error: bad header line");
    GridInput x;
    x.family = family_from_name(fam);
    if (n < 1 || m < 1) throw std::runtime_error("instance parse error: bad dimensions");
    x.n = n;
    x.m = m;
    x.k = k;
    x.cells.assign(static_cast<size_t>(n) * static_cast<size_t>(m), plain_one());
    for (int row = 1; row <= n; ++row) {
        for (int col = 1; col <= m; ++col) {
            std::istringstream ls(cur.next_line());
            int r = 0, c = 0, value = -1;
            std::string left, right, aux;
            if (!(ls >> r >> c >> value >> left >> right >> aux))
                throw std::runtime_error("instance parse error: bad cell line at line " +
                                         std::to_string(cur.line));
            if (r != row || c != col)
                throw std::runtime_error("instance parse error: cells must appear in row-major order");
            if (value != 0 && value != 1)
                throw std::runtime_error("instance parse error: value must be 0 or 1");
            CellEntry e;
            e.value = static_cast<uint8_t>(value);
            e.left = parse_cell_ptr(left, n, m);
            e.right = parse_cell_ptr(right, n, m);
            if (aux == "-") {
                e.aux = AuxPtr::null();
            } else if (x.family == Family::F) {
                int target = std::stoi(aux);
                if (target < 1 || target > m)
                    throw std::runtime_error("instance parse error: aux column out of range");
                e.aux = AuxPtr::to_col(target);
            } else {
                e.aux = AuxPtr::to_cell(*parse_cell_ptr(aux, n, m));
            }
            x.at(row, col) = e;
        }
    }
    std::string why;
    if (!x.well_formed(&why)) throw std::runtime_error("instance parse error: " + why);
    return x;
}

std::string instance_to_string(const GridInput& x) {
    std::ostringstream out;
    write_instance(out, x);
    return out.str();
}

GridInput instance_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

}  // namespace qlab
