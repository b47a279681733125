#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace segrecalc {

// splitmix64 step; used to derive independent sub-seeds from a base seed so
// that every randomized stage of a run is reproducible from (input, seed).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t s = base ^ 0xa02e1c5d87f3b941ULL;
    std::uint64_t out = splitmix64(s);
    for (std::uint64_t t : tags) {
        s ^= t;
        out = splitmix64(s);
    }
    return out;
}

// Deterministic RNG wrapper. mt19937_64 has a fully specified sequence, and
// uniform draws below use rejection sampling instead of
// std::uniform_int_distribution (whose output is implementation-defined), so
// identical seeds give identical runs on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform value in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            std::uint64_t v = gen_();
            if (v < limit) return v % bound;
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace segrecalc
