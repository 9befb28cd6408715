#include "qlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace qlab {

namespace {

void check_tractable(int arity, int alphabet) {
    if (arity < 1) throw std::invalid_argument("TruthTable: arity must be >= 1");
    if (alphabet < 2) throw std::invalid_argument("TruthTable: alphabet must be >= 2");
    double bits = arity * std::log2(static_cast<double>(alphabet));
    if (bits > 24.0 + 1e-9)
        throw SizeBoundExceeded("TruthTable: N * log2(s) exceeds the 24-bit bound");
}

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

TruthTable TruthTable::make(int arity, int alphabet, std::vector<uint8_t> values) {
    check_tractable(arity, alphabet);
    TruthTable t;
    t.arity = arity;
    t.alphabet = alphabet;
    t.values = std::move(values);
    if (t.table_size() != pow_ll(alphabet, arity))
        throw std::invalid_argument("TruthTable: table length must be s^N");
    for (uint8_t v : t.values)
        if (v > 1) throw std::invalid_argument("TruthTable: values must be bits");
    return t;
}

long long TruthTable::index_of(const std::vector<int>& point) const {
    long long idx = 0;
    for (int i = 0; i < arity; ++i) idx = idx * alphabet + point[static_cast<size_t>(i)];
    return idx;
}

int TruthTable::eval(const std::vector<int>& point) const {
    return values[static_cast<size_t>(index_of(point))];
}

TruthTable TruthTable::read(std::istream& in) {
    int arity = 0, alphabet = 0;
    if (!(in >> arity >> alphabet)) throw std::runtime_error("truth table parse error: bad header");
    check_tractable(arity, alphabet);
    std::string bits;
    if (!(in >> bits)) throw std::runtime_error("truth table parse error: missing value string");
    long long expect = pow_ll(alphabet, arity);
    if (static_cast<long long>(bits.size()) != expect)
        throw std::runtime_error("truth table parse error: expected " + std::to_string(expect) +
                                 " bits");
    std::vector<uint8_t> values;
    values.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::runtime_error("truth table parse error: non-bit value");
        values.push_back(c == '1');
    }
    return make(arity, alphabet, std::move(values));
}

void TruthTable::write(std::ostream& out) const {
    out << arity << ' ' << alphabet << '\n';
    for (uint8_t v : values) out << (v ? '1' : '0');
    out << '\n';
}

namespace {

// Restrictions are assignments over {-1 = free, 0..s-1}.
struct Restriction {
    std::vector<int8_t> fixed;

    std::string key() const { return std::string(fixed.begin(), fixed.end()); }
};

// Iterates all table indices consistent with the restriction.
template <typename Fn>
void for_each_completion(const TruthTable& f, const Restriction& r, Fn&& fn) {
    std::vector<int> point(static_cast<size_t>(f.arity), 0);
    for (int i = 0; i < f.arity; ++i)
        if (r.fixed[static_cast<size_t>(i)] >= 0)
            point[static_cast<size_t>(i)] = r.fixed[static_cast<size_t>(i)];

    std::vector<int> free_vars;
    for (int i = 0; i < f.arity; ++i)
        if (r.fixed[static_cast<size_t>(i)] < 0) free_vars.push_back(i);

    long long combos = pow_ll(f.alphabet, static_cast<int>(free_vars.size()));
    for (long long c = 0; c < combos; ++c) {
        long long rest = c;
        for (size_t v = free_vars.size(); v-- > 0;) {
            point[static_cast<size_t>(free_vars[v])] = static_cast<int>(rest % f.alphabet);
            rest /= f.alphabet;
        }
        fn(point);
    }
}

// -1 when not constant on the subcube, else the constant value.
int constant_value(const TruthTable& f, const Restriction& r) {
    int value = -2;
    bool mixed = false;
    for_each_completion(f, r, [&](const std::vector<int>& point) {
        int v = f.eval(point);
        if (value == -2) value = v;
        else if (v != value) mixed = true;
    });
    return mixed ? -1 : value;
}

int exact_D_rec(const TruthTable& f, Restriction& r,
                std::unordered_map<std::string, int>& memo) {
    int constant = constant_value(f, r);
    if (constant >= 0) return 0;
    auto key = r.key();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int best = f.arity + 1;
    for (int i = 0; i < f.arity && best > 1; ++i) {
        if (r.fixed[static_cast<size_t>(i)] >= 0) continue;
        int worst = 0;
        for (int v = 0; v < f.alphabet && worst < best; ++v) {
            r.fixed[static_cast<size_t>(i)] = static_cast<int8_t>(v);
            worst = std::max(worst, exact_D_rec(f, r, memo));
            r.fixed[static_cast<size_t>(i)] = -1;
        }
        best = std::min(best, 1 + worst);
    }
    memo.emplace(std::move(key), best);
    return best;
}

}  // namespace

int exact_D(const TruthTable& f) {
    check_tractable(f.arity, f.alphabet);
    Restriction r;
    r.fixed.assign(static_cast<size_t>(f.arity), -1);
    std::unordered_map<std::string, int> memo;
    return exact_D_rec(f, r, memo);
}

int certificate_complexity(const TruthTable& f, int b) {
    check_tractable(f.arity, f.alphabet);

    // Subsets of variables in increasing size, reused for every input.
    std::vector<std::vector<int>> subsets_by_size(static_cast<size_t>(f.arity) + 1);
    for (int mask = 0; mask < (1 << f.arity); ++mask)
        subsets_by_size[static_cast<size_t>(__builtin_popcount(static_cast<unsigned>(mask)))]
            .push_back(mask);

    int worst = 0;
    std::vector<int> point(static_cast<size_t>(f.arity), 0);
    long long total = f.table_size();
    for (long long idx = 0; idx < total; ++idx) {
        long long rest = idx;
        for (size_t i = point.size(); i-- > 0;) {
            point[i] = static_cast<int>(rest % f.alphabet);
            rest /= f.alphabet;
        }
        if (f.values[static_cast<size_t>(idx)] != b) continue;

        int needed = -1;
        for (int size = 0; size <= f.arity && needed < 0; ++size) {
            for (int mask : subsets_by_size[static_cast<size_t>(size)]) {
                Restriction r;
                r.fixed.assign(static_cast<size_t>(f.arity), -1);
                for (int i = 0; i < f.arity; ++i)
                    if (mask & (1 << i)) r.fixed[static_cast<size_t>(i)] =
                        static_cast<int8_t>(point[static_cast<size_t>(i)]);
                if (constant_value(f, r) == b) {
                    needed = size;
                    break;
                }
            }
        }
        worst = std::max(worst, needed);
    }
    return worst;
}

int degree(const TruthTable& f) {
    if (f.alphabet != 2) throw std::invalid_argument("degree: boolean alphabet only");
    check_tractable(f.arity, f.alphabet);
    // Moebius transform over the subset lattice; table index bit (arity-1-i)
    // carries variable i+1.
    std::vector<long long> coef(f.values.begin(), f.values.end());
    int bits = f.arity;
    for (int i = 0; i < bits; ++i) {
        int step = 1 << i;
        for (int mask = 0; mask < (1 << bits); ++mask)
            if (mask & step) coef[static_cast<size_t>(mask)] -= coef[static_cast<size_t>(mask ^ step)];
    }
    int deg = 0;
    for (int mask = 0; mask < (1 << bits); ++mask)
        if (coef[static_cast<size_t>(mask)] != 0)
            deg = std::max(deg, __builtin_popcount(static_cast<unsigned>(mask)));
    return deg;
}

}  // namespace qlab
