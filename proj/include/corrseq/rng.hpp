#pragma once

#include <cstdint>
#include <random>

namespace corrseq {

// Deterministic random source. mt19937_64 output is pinned by the standard,
// and all derived draws below avoid std::uniform_*_distribution (whose
// algorithms are implementation-defined), so a (seed, call sequence) pair
// reproduces the same values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed), base_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // Uniform in [0,1) with 53 random bits.
    double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    // Uniform index in [0, n).
    std::uint64_t index(std::uint64_t n) { return n ? u64() % n : 0; }

    int sign() { return (u64() & 1) ? 1 : -1; }

    bool coin() { return (u64() & 1) != 0; }

    std::uint64_t seed() const { return base_; }

    // Independent substream derived from the construction seed and i via
    // splitmix64; unaffected by draws already made from this object.
    Rng substream(std::uint64_t i) const {
        std::uint64_t z = base_ + (i + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        return Rng(z);
    }

private:
    std::mt19937_64 eng_;
    std::uint64_t base_;
};

} // namespace corrseq
