#pragma once

#include <cstdint>
#include <random>

namespace baco {

/// SplitMix64 finalizer. Used to derive independent per-run seeds from a
/// master seed; the constants are the ones published by Vigna for splitmix64.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Stable seed derivation: hash(master, n, rep). Runs keep the same seed no
/// matter in which order (or on how many threads) they execute.
constexpr std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t n,
                                        std::uint64_t rep) noexcept {
    return mix64(mix64(mix64(master_seed) ^ n) ^ rep);
}

/// Seeded generator with a canonical uint64 -> double conversion, so streams
/// are reproducible across standard library implementations (mt19937_64 output
/// is fully specified; std distributions are not).
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), unbiased via rejection. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    bool bernoulli(double p) { return next_unit() < p; }

  private:
    std::mt19937_64 gen_;
};

} // namespace baco
