#include "qlab/grid.hpp"

#include <stdexcept>

namespace qlab {

const char* family_name(Family f) {
    switch (f) {
        case Family::Gpw: return "gpw";
        case Family::F: return "f";
        case Family::G: return "g";
        case Family::H: return "h";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "gpw") return Family::Gpw;
    if (name == "f") return Family::F;
    if (name == "g") return Family::G;
    if (name == "h") return Family::H;
    throw std::invalid_argument("unknown family: " + name);
}

bool cell_in_grid(CellRef c, int n, int m) {
    return c.row >= 1 && c.row <= n && c.col >= 1 && c.col <= m;
}

bool entry_matches_family(const CellEntry& e, Family family, int n, int m) {
    if (e.value > 1) return false;
    if (e.left && !cell_in_grid(*e.left, n, m)) return false;
    if (e.right && !cell_in_grid(*e.right, n, m)) return false;
    switch (e.aux.kind) {
        case AuxPtr::Kind::Null: break;
        case AuxPtr::Kind::Cell:
            if (family == Family::F) return false;
            if (!cell_in_grid(e.aux.cell, n, m)) return false;
            break;
        case AuxPtr::Kind::Col:
            if (family != Family::F) return false;
            if (e.aux.col < 1 || e.aux.col > m) return false;
            break;
    }
    // The gpw alphabet is {0,1} x (cells + null): its single pointer lives in
    // the aux slot and the tree slots stay null.
    if (family == Family::Gpw && (e.left || e.right)) return false;
    return true;
}

}  // namespace qlab
