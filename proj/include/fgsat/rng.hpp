#pragma once

#include <cstdint>
#include <random>

namespace fgsat {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Mix a master seed with salts into an independent stream seed.
inline uint64_t derive_seed(uint64_t master, uint64_t salt_a,
                            uint64_t salt_b = 0, uint64_t salt_c = 0) {
    uint64_t s = splitmix64(master ^ 0x6A09E667F3BCC909ULL);
    s = splitmix64(s ^ salt_a);
    s = splitmix64(s ^ salt_b);
    return splitmix64(s ^ salt_c);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0, n). Rejection-free modulo bias is negligible for the
    // small n used here, but do it properly anyway.
    uint32_t uniform_index(uint32_t n) {
        const uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return uint32_t(v % n);
    }

    double uniform() {  // [0, 1)
        return double(eng_() >> 11) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal(double mean = 0.0, double stddev = 1.0) {
        return std::normal_distribution<double>(mean, stddev)(eng_);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace fgsat
