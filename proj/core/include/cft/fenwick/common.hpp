#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>

#include "cft/bitops.hpp"

namespace cft {

/// Result of a (complemented) predecessor search: the prefix length and the
/// amount by which the argument exceeds the (complemented) prefix sum.
struct FindResult {
    std::size_t length = 0;
    std::uint64_t excess = 0;

    friend bool operator==(const FindResult&, const FindResult&) = default;
};

/// Interval between w-bit holes is 2^hole_log nodes; kNoHoles disables them.
inline constexpr unsigned kDefaultHoleLog = 14;
inline constexpr unsigned kNoHoles = 64;

struct TreeOptions {
    unsigned hole_log = kDefaultHoleLog;
};

/// Number of holes preceding node j.
constexpr std::size_t holes_before(std::size_t j, unsigned hole_log) noexcept {
    return hole_log >= kWordBits ? 0 : j >> hole_log;
}

/// Bits needed for values in [0, bound].
constexpr unsigned bound_width(std::uint64_t bound) noexcept {
    return static_cast<unsigned>(std::bit_width(bound));
}

/// The observable contract shared by every Fenwick layout.
template <class T>
concept FenwickTree = requires(T t, const T ct, std::size_t i, std::uint64_t x, std::int64_t d) {
    { ct.size() } -> std::convertible_to<std::size_t>;
    { ct.bound() } -> std::convertible_to<std::uint64_t>;
    { ct.prefix(i) } -> std::convertible_to<std::uint64_t>;
    { ct.find(x) } -> std::same_as<FindResult>;
    { ct.find_complement(x) } -> std::same_as<FindResult>;
    { ct.get(i) } -> std::convertible_to<std::uint64_t>;
    { ct.storage_bits() } -> std::convertible_to<std::size_t>;
    t.add(i, d);
    t.push(x);
    t.pop();
};

}  // namespace cft
