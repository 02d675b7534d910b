#pragma once

#include <cstdint>

namespace cft::apps {

__extension__ using uint128_t = unsigned __int128;

/// splitmix64: fixed so that generated streams are reproducible across builds.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by 128-bit multiply-shift.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>((static_cast<uint128_t>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace cft::apps
