#pragma once

#include <string>

#include "qlab/grid.hpp"

namespace qlab {

// Fixed-width booleanization of the cell alphabet.  Field order: value bit,
// left pointer, right pointer, aux pointer.  Cell pointers occupy
// ceil(log2(n*m+1)) bits encoding 0 for null and 1 + (row-1)*m + (col-1)
// otherwise; family F's aux column pointer occupies ceil(log2(m+1)) bits
// encoding 0 for null and the column index otherwise.  Bits are MSB first
// within each field.

int cell_ptr_bits(int n, int m);
int col_ptr_bits(int m);
int entry_bits(Family family, int n, int m);

std::string encode_entry(const CellEntry& e, Family family, int n, int m);
CellEntry decode_entry(const std::string& bits, Family family, int n, int m);

}  // namespace qlab
