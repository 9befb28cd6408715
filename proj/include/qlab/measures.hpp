#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlab {

struct SizeBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explicit function over s-ary inputs; tractability bound N * log2(s) <= 24.
// Input (x_1..x_N) maps to index sum x_i * s^(N-i), x_1 most significant.
struct TruthTable {
    int arity = 0;
    int alphabet = 2;
    std::vector<uint8_t> values;

    static TruthTable make(int arity, int alphabet, std::vector<uint8_t> values);

    long long table_size() const { return static_cast<long long>(values.size()); }
    int eval(const std::vector<int>& point) const;
    long long index_of(const std::vector<int>& point) const;

    // File format: line 1 "N s"; line 2 a string of s^N bits in
    // lexicographic input order.
    static TruthTable read(std::istream& in);
    void write(std::ostream& out) const;
};

// Deterministic query complexity by memoized minimax over restrictions.
int exact_D(const TruthTable& f);

// Max over x in f^-1(b) of the smallest partial assignment of x forcing
// value b; 0 when f^-1(b) is empty.
int certificate_complexity(const TruthTable& f, int b);

// Exact degree of the unique multilinear expansion (boolean alphabet only).
int degree(const TruthTable& f);

}  // namespace qlab
