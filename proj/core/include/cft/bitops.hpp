#pragma once

// Word-level primitives: ruler (lowest set bit), most significant bit,
// sideways sum and in-word selection.  Each primitive comes in a portable
// broadword flavour and a dispatching flavour that uses hardware
// instructions (POPCNT, TZCNT, PDEP) when the build target provides them.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace cft {

using word_t = std::uint64_t;

inline constexpr unsigned kWordBits = 64;
inline constexpr word_t kAllOnes = ~word_t{0};

#if defined(__BMI2__)
inline constexpr bool kHardwareSelect = true;
#else
inline constexpr bool kHardwareSelect = false;
#endif

#if defined(__POPCNT__)
inline constexpr bool kHardwarePopcount = true;
#else
inline constexpr bool kHardwarePopcount = false;
#endif

namespace portable {

inline constexpr word_t kOnesStep4 = 0x1111111111111111ULL;
inline constexpr word_t kOnesStep8 = 0x0101010101010101ULL;
inline constexpr word_t kMsbsStep8 = 0x80ULL * kOnesStep8;

namespace detail {

// kSelectInByte[r * 256 + b]: position of the (r+1)-th one of byte b (8 if none).
inline constexpr auto kSelectInByte = [] {
    std::array<std::uint8_t, 256 * 8> table{};
    for (unsigned b = 0; b < 256; ++b) {
        for (unsigned r = 0; r < 8; ++r) {
            unsigned seen = 0;
            std::uint8_t pos = 8;
            for (unsigned i = 0; i < 8; ++i) {
                if ((b >> i) & 1U) {
                    if (seen == r) {
                        pos = static_cast<std::uint8_t>(i);
                        break;
                    }
                    ++seen;
                }
            }
            table[r * 256 + b] = pos;
        }
    }
    return table;
}();

// Byte i of the result holds the number of ones in bytes 0..i of x.
constexpr word_t cumulative_byte_counts(word_t x) noexcept {
    word_t s = x - ((x & (0xA * kOnesStep4)) >> 1);
    s = (s & (3 * kOnesStep4)) + ((s >> 2) & (3 * kOnesStep4));
    s = (s + (s >> 4)) & (0x0F * kOnesStep8);
    return s * kOnesStep8;
}

}  // namespace detail

constexpr unsigned rho(word_t x) noexcept {
    if (x == 0) return kWordBits;
    unsigned r = 0;
    word_t low = x & (~x + 1);
    if (low & 0xFFFFFFFF00000000ULL) r += 32;
    if (low & 0xFFFF0000FFFF0000ULL) r += 16;
    if (low & 0xFF00FF00FF00FF00ULL) r += 8;
    if (low & 0xF0F0F0F0F0F0F0F0ULL) r += 4;
    if (low & 0xCCCCCCCCCCCCCCCCULL) r += 2;
    if (low & 0xAAAAAAAAAAAAAAAAULL) r += 1;
    return r;
}

constexpr unsigned msb(word_t x) noexcept {
    unsigned r = 0;
    if (x >> 32) { x >>= 32; r += 32; }
    if (x >> 16) { x >>= 16; r += 16; }
    if (x >> 8) { x >>= 8; r += 8; }
    if (x >> 4) { x >>= 4; r += 4; }
    if (x >> 2) { x >>= 2; r += 2; }
    if (x >> 1) { r += 1; }
    return r;
}

constexpr unsigned nu(word_t x) noexcept {
    x = x - ((x >> 1) & 0x5555555555555555ULL);
    x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0FULL;
    return static_cast<unsigned>((x * kOnesStep8) >> 56);
}

/// Broadword selection; k must be smaller than nu(x).
constexpr unsigned select_in_word(word_t x, unsigned k) noexcept {
    const word_t byte_sums = detail::cumulative_byte_counts(x);
    const word_t k_step8 = static_cast<word_t>(k) * kOnesStep8;
    // MSB of byte i is set iff byte_sums[i] <= k; those bytes precede the target.
    const word_t le = (((k_step8 | kMsbsStep8) - byte_sums) & kMsbsStep8);
    const unsigned place = static_cast<unsigned>(((le >> 7) * kOnesStep8) >> 56) * 8;
    const unsigned before = place == 0 ? 0 : static_cast<unsigned>((byte_sums >> (place - 8)) & 0xFF);
    const unsigned byte = static_cast<unsigned>((x >> place) & 0xFF);
    return place + detail::kSelectInByte[(k - before) * 256 + byte];
}

}  // namespace portable

/// Index of the lowest set bit; 64 for x == 0.
constexpr unsigned rho(word_t x) noexcept { return static_cast<unsigned>(std::countr_zero(x)); }

/// floor(lg x) without the zero check; x must be positive.
constexpr unsigned msb_nonzero(word_t x) noexcept {
    return kWordBits - 1 - static_cast<unsigned>(std::countl_zero(x));
}

/// Index of the highest set bit.  Undefined (domain_error) for x == 0.
constexpr unsigned lambda(word_t x) {
    if (x == 0) throw std::domain_error("lambda: undefined for zero");
    return msb_nonzero(x);
}

/// Sideways sum.
constexpr unsigned nu(word_t x) noexcept { return static_cast<unsigned>(std::popcount(x)); }

namespace detail {

inline unsigned select_in_word_unchecked(word_t x, unsigned k) noexcept {
#if defined(__BMI2__)
    return static_cast<unsigned>(std::countr_zero(_pdep_u64(word_t{1} << k, x)));
#else
    return portable::select_in_word(x, k);
#endif
}

}  // namespace detail

/// Position of the (k+1)-th set bit of x (k zero-based).
inline unsigned select_in_word(word_t x, unsigned k) {
    if (k >= nu(x)) throw std::out_of_range("select_in_word: rank exceeds popcount");
    return detail::select_in_word_unchecked(x, k);
}

/// Position of the (k+1)-th zero bit of x.
inline unsigned select_zero_in_word(word_t x, unsigned k) {
    if (k >= kWordBits - nu(x)) throw std::out_of_range("select_zero_in_word: rank exceeds zero count");
    return detail::select_in_word_unchecked(~x, k);
}

/// Ones in the lowest `bits` bits of x; bits may be 0..64.
constexpr unsigned rank_in_word(word_t x, unsigned bits) noexcept {
    return bits >= kWordBits ? nu(x) : nu(x & ((word_t{1} << bits) - 1));
}

}  // namespace cft
