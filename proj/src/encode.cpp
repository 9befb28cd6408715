#include "qlab/encode.hpp"

#include <stdexcept>

namespace qlab {

namespace {

int bits_for(long long max_value) {
    int bits = 0;
    while ((1LL << bits) <= max_value) ++bits;
    return bits;  // ceil(log2(max_value + 1))
}

void append_field(std::string& out, long long value, int width) {
    for (int b = width - 1; b >= 0; --b) out.push_back((value >> b) & 1 ? '1' : '0');
}

long long read_field(const std::string& bits, size_t& pos, int width) {
    long long v = 0;
    for (int b = 0; b < width; ++b) {
        char c = bits[pos++];
        if (c != '0' && c != '1') throw std::invalid_argument("decode_entry: non-bit character");
        v = (v << 1) | (c == '1');
    }
    return v;
}

long long cell_ptr_index(const CellPtr& p, int m) {
    if (!p) return 0;
    return 1 + static_cast<long long>(p->row - 1) * m + (p->col - 1);
}

CellPtr cell_ptr_from_index(long long idx, int n, int m) {
    if (idx == 0) return std::nullopt;
    if (idx < 1 || idx > static_cast<long long>(n) * m)
        throw std::invalid_argument("decode_entry: cell pointer out of range");
    long long z = idx - 1;
    return CellRef{static_cast<int>(z / m) + 1, static_cast<int>(z % m) + 1};
}

}  // namespace

int cell_ptr_bits(int n, int m) { return bits_for(static_cast<long long>(n) * m); }

int col_ptr_bits(int m) { return bits_for(m); }

int entry_bits(Family family, int n, int m) {
    int cp = cell_ptr_bits(n, m);
    int aux = family == Family::F ? col_ptr_bits(m) : cp;
    return 1 + 2 * cp + aux;
}

std::string encode_entry(const CellEntry& e, Family family, int n, int m) {
    if (!entry_matches_family(e, family, n, m))
        throw std::invalid_argument("encode_entry: entry does not match family schema");
    int cp = cell_ptr_bits(n, m);
    std::string out;
    out.reserve(static_cast<size_t>(entry_bits(family, n, m)));
    out.push_back(e.value ? '1' : '0');
    append_field(out, cell_ptr_index(e.left, m), cp);
    append_field(out, cell_ptr_index(e.right, m), cp);
    if (family == Family::F) {
        append_field(out, e.aux.is_null() ? 0 : e.aux.col, col_ptr_bits(m));
    } else {
        CellPtr aux = e.aux.is_null() ? CellPtr{} : CellPtr{e.aux.cell};
        append_field(out, cell_ptr_index(aux, m), cp);
    }
    return out;
}

CellEntry decode_entry(const std::string& bits, Family family, int n, int m) {
    if (static_cast<int>(bits.size()) != entry_bits(family, n, m))
        throw std::invalid_argument("decode_entry: wrong width");
    int cp = cell_ptr_bits(n, m);
    size_t pos = 0;
    CellEntry e;
    e.value = bits[pos++] == '1' ? 1 : 0;
    e.left = cell_ptr_from_index(read_field(bits, pos, cp), n, m);
    e.right = cell_ptr_from_index(read_field(bits, pos, cp), n, m);
    if (family == Family::F) {
        long long col = read_field(bits, pos, col_ptr_bits(m));
        e.aux = col == 0 ? AuxPtr::null() : AuxPtr::to_col(static_cast<int>(col));
        if (col > m) throw std::invalid_argument("decode_entry: column pointer out of range");
    } else {
        CellPtr aux = cell_ptr_from_index(read_field(bits, pos, cp), n, m);
        e.aux = aux ? AuxPtr::to_cell(*aux) : AuxPtr::null();
    }
    if (!entry_matches_family(e, family, n, m))
        throw std::invalid_argument("decode_entry: entry does not match family schema");
    return e;
}

}  // namespace qlab
