#pragma once

#include <cstdint>
#include <vector>

namespace qlab {

// Deterministic xoshiro256** generator.  All randomized components of the
// laboratory draw from this so that a (seed, parameters) pair pins down every
// output bit regardless of platform or standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    uint64_t next() {
        uint64_t result = rotl(state_[1] * 5, 7) * 9;
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform integer in [0, bound), bound >= 1.  Lemire rejection sampling.
    uint64_t below(uint64_t bound) {
        uint64_t x = next();
        __uint128_t wide = static_cast<__uint128_t>(x) * bound;
        auto low = static_cast<uint64_t>(wide);
        if (low < bound) {
            uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = next();
                wide = static_cast<__uint128_t>(x) * bound;
                low = static_cast<uint64_t>(wide);
            }
        }
        return static_cast<uint64_t>(wide >> 64);
    }

    // Uniform integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return (next() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values sampled uniformly from {0, ..., pool-1}.
    std::vector<long long> distinct(long long pool, long long k) {
        std::vector<long long> all(static_cast<size_t>(pool));
        for (long long i = 0; i < pool; ++i) all[static_cast<size_t>(i)] = i;
        for (long long i = 0; i < k; ++i) {
            long long j = i + static_cast<long long>(below(static_cast<uint64_t>(pool - i)));
            std::swap(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]);
        }
        all.resize(static_cast<size_t>(k));
        return all;
    }

    static uint64_t splitmix64(uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Stable derivation of stream seeds, e.g. per (size, trial) in a sweep.
    static uint64_t mix(uint64_t a, uint64_t b) {
        uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
        return splitmix64(x);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
};

}  // namespace qlab
