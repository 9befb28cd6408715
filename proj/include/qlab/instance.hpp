#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "qlab/grid.hpp"
#include "qlab/rng.hpp"
#include "qlab/tree.hpp"

namespace qlab {

// An n x m array of cells together with its family tag and (for family H)
// the marked-column count k.
struct GridInput {
    Family family = Family::F;
    int n = 0;
    int m = 0;
    int k = 1;
    std::vector<CellEntry> cells;  // row-major, all n*m present

    static GridInput blank(Family family, int n, int m, int k = 1);

    CellEntry& at(CellRef c) { return cells[index(c)]; }
    const CellEntry& at(CellRef c) const { return cells[index(c)]; }
    CellEntry& at(int row, int col) { return at(CellRef{row, col}); }
    const CellEntry& at(int row, int col) const { return at(CellRef{row, col}); }

    size_t index(CellRef c) const {
        return static_cast<size_t>(c.row - 1) * static_cast<size_t>(m) +
               static_cast<size_t>(c.col - 1);
    }

    bool well_formed(std::string* why = nullptr) const;
};

struct InfeasibleDims : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPositive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A partial assignment forcing the function to 1: fixed (cell, entry) pairs
// in row-major order, no cell twice.
struct Certificate {
    std::vector<std::pair<CellRef, CellEntry>> fixed;

    size_t size() const { return fixed.size(); }
    bool fixes(CellRef c) const;
};

// Hard-distribution descriptors.
struct HardSampleG {
    std::vector<int> zero_row;  // indexed 1..m, row of the single zero per column
};

struct HardSampleH1 {
    int v = 0;                        // function value of the built input
    std::vector<int> node_column;     // tree node id -> column (internal nodes only, 0 otherwise)
    std::vector<int> leaf_row;        // 1..m, row hosting the leaf of column j
    std::vector<int> internal_row;    // 1..m, row hosting the internal node of column j
    int root_column = 0;              // column of the tree root (its leaf is removed)
};

// Evaluates the family's defining conditions literally; throws
// std::invalid_argument on schema violations.
int evaluate(const GridInput& x);

enum class GarbageMode { Clean, Random };

// Deterministic positive-instance generator.  Throws InfeasibleDims if the
// grid cannot host the construction (n >= 2 and the internal tree nodes must
// fit outside the marked columns and leaf cells).
GridInput generate_positive(Family family, int n, int m, int k, uint64_t seed,
                            GarbageMode garbage = GarbageMode::Clean);

// One uniformly placed zero cell (0, null, null, null) per column, everything
// else (1, null, null, null).  The hard negative distribution of the
// zero-error lower bounds; stated for families g and h, and reused verbatim
// for gpw and f where tests need structureless negatives.
GridInput sample_hard_negative(Family family, int n, int m, uint64_t seed, int k = 1);

HardSampleG hard_negative_zero_rows(const GridInput& x);

// The mixed-sign hard distribution for h_{1,n,m}: a hidden balanced tree of
// zeroes whose root cell carries the function value.
std::pair<GridInput, HardSampleH1> sample_hard_h1(int n, int m, uint64_t seed);

// The forced positions of a positive input: the marked column(s) in full plus
// every cell read by the path conditions.  Throws NotPositive otherwise.
Certificate extract_certificate(const GridInput& x);

// Fills all cells not fixed by `cert` with seeded random schema-valid
// entries; every completion of a certificate evaluates to 1.
GridInput random_completion(const Certificate& cert, Family family, int n, int m, int k,
                            Rng& rng);

// For family g: the set G of good columns when positive, empty when negative.
std::vector<int> good_columns(const GridInput& x);

// All-1 columns of x, ascending.
std::vector<int> all_one_columns(const GridInput& x);

// Instance file format: line 1 "family n m k"; one line per cell in
// row-major order: "row col value left right aux" with pointers "-" (null),
// "r,c" (cell) or a bare column index (family f aux).
void write_instance(std::ostream& out, const GridInput& x);
GridInput read_instance(std::istream& in);

std::string instance_to_string(const GridInput& x);
GridInput instance_from_string(const std::string& text);

}  // namespace qlab
