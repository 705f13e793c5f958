// Deterministic randomness. Every stochastic routine in the library takes an
// explicit SeededRng; nothing draws from global or hardware entropy, so any
// experiment replays bit-identically from its seed.

#pragma once

#include <cstdint>
#include <random>

namespace qsim {

// SplitMix64 step. Used for seed derivation, not as the main generator.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derivation rule for per-trial seeds: seed_i = splitmix64(master + i + 1),
// so adding trials never perturbs the seeds of earlier trials.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + index + 1);
}

class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits. Built by hand so the
    // mapping is fixed by this file, not by the standard library's
    // distribution internals.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) by rejection (bound > 0).
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    SeededRng derive(std::uint64_t index) const {
        return SeededRng(derive_seed(seed_, index));
    }

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace qsim
