#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sskm {

// Seeded PRNG wrapper around std::mt19937_64. The mt19937_64 output sequence
// is fixed by the standard, and the [0,1) mapping below uses only the top 53
// bits, so traces replay bit-exactly across platforms. No std::*_distribution
// is used anywhere (their output is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Unbiased integer in [0, n), n >= 1, by rejection.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[next_below(i)]);
        }
    }

    // Independent child stream derived from the original seed and a stream
    // index (splitmix64 finalizer). Used for per-class parallel runs.
    Rng split(std::uint64_t stream) const {
        std::uint64_t z = seed_ + (stream + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return Rng(z ^ (z >> 31));
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace sskm
