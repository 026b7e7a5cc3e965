#pragma once

#include <cstdint>
#include <random>

namespace ccc {

// SplitMix64 finalizer. Used to derive independent sub-seeds so that every
// replicate / purpose gets its own stream regardless of execution order.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t subseed(std::uint64_t seed, std::uint64_t index,
                                std::uint64_t tag) noexcept {
    return subseed(subseed(seed, index), tag);
}

// Stream tags for subseed(seed, replicate, tag).
inline constexpr std::uint64_t kGraphStream = 0x67726170680000ULL;  // "graph"
inline constexpr std::uint64_t kTieStream = 0x746965730000ULL;      // "ties"

/// Deterministic random source: std::mt19937_64 (whose output sequence is
/// fixed by the C++ standard) plus hand-rolled conversions, so draws are
/// bit-identical across standard libraries. The std distributions are not
/// used because their algorithms are implementation-defined.
__extension__ using Uint128 = unsigned __int128;

class Rng {
public:
    using result_type = std::uint64_t;
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    result_type operator()() { return engine_(); }

    std::uint64_t next() { return engine_(); }

    /// Uniform double in the open interval (0, 1), 53 bits of resolution.
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift
    /// with rejection, so the result is exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        Uint128 m = static_cast<Uint128>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<Uint128>(engine_()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace ccc
