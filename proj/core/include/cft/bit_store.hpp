#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <vector>

#include "cft/bitops.hpp"
#include "cft/contract.hpp"

namespace cft {

static_assert(std::endian::native == std::endian::little,
              "bit and byte layouts assume a little-endian host");

/// Growable bit-addressable storage.  Bit i lives in bit (i mod 64) of word i / 64.
/// Fields of 1..64 bits may start at any offset; a field touches at most two words.
class BitStore {
public:
    BitStore() = default;

    explicit BitStore(std::size_t len_bits) : words_(words_for(len_bits), 0), len_bits_(len_bits) {}

    std::size_t size() const noexcept { return len_bits_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const word_t> words() const noexcept { return words_; }

    /// Bits of memory actually in use (whole words).
    std::size_t storage_bits() const noexcept { return words_.size() * kWordBits; }

    word_t read_bits(std::size_t offset, unsigned width) const {
        check_field(offset, width);
        return read_unchecked(offset, width);
    }

    /// Single aligned word access; the field must not cross a word boundary.
    word_t read_bits_aligned(std::size_t offset, unsigned width) const {
        CFT_EXPECTS(width >= 1 && width <= kWordBits && offset + width <= len_bits_,
                    "aligned read out of bounds");
        CFT_EXPECTS((offset % kWordBits) + width <= kWordBits, "aligned read crosses a word boundary");
        return (words_[offset / kWordBits] >> (offset % kWordBits)) & mask(width);
    }

    /// One unaligned 8-byte load starting at byte window_bit / 8.  The field must lie
    /// inside [window_bit, window_bit + 64) and window_bit must be a multiple of 8.
    /// Falls back to a two-word read when the window would run past the last word.
    word_t read_bits_in_window(std::size_t window_bit, std::size_t offset, unsigned width) const {
        CFT_EXPECTS(window_bit % 8 == 0 && offset >= window_bit &&
                        offset + width <= window_bit + kWordBits && offset + width <= len_bits_,
                    "windowed read outside its window");
        if (window_bit + kWordBits > words_.size() * kWordBits) return read_unchecked(offset, width);
        word_t w;
        std::memcpy(&w, reinterpret_cast<const unsigned char*>(words_.data()) + window_bit / 8, sizeof w);
        return (w >> (offset - window_bit)) & mask(width);
    }

    void write_bits(std::size_t offset, unsigned width, word_t value) {
        check_field(offset, width);
        if (width < kWordBits && (value >> width) != 0)
            throw std::out_of_range("BitStore::write_bits: value wider than field");
        write_unchecked(offset, width, value);
    }

    /// Increase the length; new bits are zero.
    void grow(std::size_t new_len_bits) {
        if (new_len_bits < len_bits_) throw std::invalid_argument("BitStore::grow: cannot shrink");
        len_bits_ = new_len_bits;
        words_.resize(words_for(new_len_bits), 0);
    }

    /// Decrease the length; dropped bits are zeroed so that a later grow reads zeros.
    void truncate(std::size_t new_len_bits) {
        if (new_len_bits > len_bits_) throw std::invalid_argument("BitStore::truncate: cannot grow");
        words_.resize(words_for(new_len_bits));
        if (new_len_bits % kWordBits != 0) words_.back() &= mask(new_len_bits % kWordBits);
        len_bits_ = new_len_bits;
    }

    void reserve(std::size_t len_bits) { words_.reserve(words_for(len_bits)); }

    friend bool operator==(const BitStore&, const BitStore&) = default;

private:
    static constexpr std::size_t words_for(std::size_t bits) noexcept {
        return (bits + kWordBits - 1) / kWordBits;
    }

    static constexpr word_t mask(unsigned width) noexcept {
        return width >= kWordBits ? kAllOnes : (word_t{1} << width) - 1;
    }

    void check_field(std::size_t offset, unsigned width) const {
        if (width == 0 || width > kWordBits) throw std::out_of_range("BitStore: field width must be 1..64");
        if (offset > len_bits_ || width > len_bits_ - offset) throw std::out_of_range("BitStore: field out of bounds");
    }

    word_t read_unchecked(std::size_t offset, unsigned width) const noexcept {
        const std::size_t idx = offset / kWordBits;
        const unsigned shift = offset % kWordBits;
        word_t result = words_[idx] >> shift;
        if (shift + width > kWordBits) result |= words_[idx + 1] << (kWordBits - shift);
        return result & mask(width);
    }

    void write_unchecked(std::size_t offset, unsigned width, word_t value) noexcept {
        const std::size_t idx = offset / kWordBits;
        const unsigned shift = offset % kWordBits;
        const word_t m = mask(width);
        words_[idx] = (words_[idx] & ~(m << shift)) | (value << shift);
        if (shift + width > kWordBits) {
            const unsigned spill = kWordBits - shift;
            words_[idx + 1] = (words_[idx + 1] & ~(m >> spill)) | (value >> spill);
        }
    }

    std::vector<word_t> words_;
    std::size_t len_bits_ = 0;
};

}  // namespace cft
