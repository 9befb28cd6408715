#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace qlab {

// The four pointer-function families.  `Gpw` is the original single-pointer
// grid function; F adds a tree plus column back pointers; G replaces them
// with cell back pointers to the special element; H has k marked columns
// linked by internal pointers and no back pointers.
enum class Family : uint8_t { Gpw, F, G, H };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// 1-based grid coordinates, row in [1..n], col in [1..m].
struct CellRef {
    int row = 0;
    int col = 0;

    auto operator<=>(const CellRef&) const = default;
};

// Pointer to a cell; nullopt is the null pointer.
using CellPtr = std::optional<CellRef>;

// The auxiliary slot of a cell.  Family F stores a column pointer here; the
// other families store a cell pointer (the gpw path pointer, the g back
// pointer, the h internal pointer).
struct AuxPtr {
    enum class Kind : uint8_t { Null, Cell, Col };

    Kind kind = Kind::Null;
    CellRef cell{};
    int col = 0;

    static AuxPtr null() { return AuxPtr{}; }
    static AuxPtr to_cell(CellRef c) { return AuxPtr{Kind::Cell, c, 0}; }
    static AuxPtr to_col(int c) { return AuxPtr{Kind::Col, CellRef{}, c}; }

    bool is_null() const { return kind == Kind::Null; }
    bool is_cell(CellRef c) const { return kind == Kind::Cell && cell == c; }
    bool is_col(int c) const { return kind == Kind::Col && col == c; }

    friend bool operator==(const AuxPtr& a, const AuxPtr& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::Null: return true;
            case Kind::Cell: return a.cell == b.cell;
            case Kind::Col: return a.col == b.col;
        }
        return false;
    }
};

// One grid cell: a value bit plus up to three pointer slots.
struct CellEntry {
    uint8_t value = 1;
    CellPtr left;
    CellPtr right;
    AuxPtr aux;

    friend bool operator==(const CellEntry&, const CellEntry&) = default;
};

// The quiescent cell (1, null, null, null).
inline CellEntry plain_one() { return CellEntry{}; }

inline CellEntry plain_zero() { return CellEntry{0, std::nullopt, std::nullopt, AuxPtr::null()}; }

bool cell_in_grid(CellRef c, int n, int m);

// Whether `e` fits the family's alphabet: pointer targets inside the n x m
// grid, the aux slot of the right kind, and (for gpw) null left/right slots.
bool entry_matches_family(const CellEntry& e, Family family, int n, int m);

}  // namespace qlab
