#pragma once

// Fenwick-order layouts: node j is stored in position j, with a w-bit hole
// inserted every 2^hole_log nodes to break hyper-alignment of hot nodes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cft/bit_store.hpp"
#include "cft/bitops.hpp"
#include "cft/contract.hpp"
#include "cft/fenwick/base.hpp"
#include "cft/fenwick/common.hpp"

namespace cft {

namespace classical {

/// Bit layout: node j occupies S + rho(j) bits; the whole array is shifted
/// one bit to the right so that nodes with j(S+1) = 0 (mod w) are word-contained.
struct BitField {
    std::size_t offset;
    unsigned width;
};

constexpr BitField bit_field(std::size_t j, unsigned value_bits, unsigned hole_log) noexcept {
    const unsigned width = value_bits + rho(j);
    const std::size_t end = j * (value_bits + 1) - nu(j) + 1;
    return {end - width + kWordBits * holes_before(j, hole_log), width};
}

/// Total bits used by n nodes, including the leading spare bit and the holes.
constexpr std::size_t bit_storage(std::size_t n, unsigned value_bits, unsigned hole_log) noexcept {
    return n * (value_bits + 1) - nu(n) + 1 + kWordBits * holes_before(n, hole_log);
}

/// Three-size byte layout.  Node j takes b bytes when S + rho(j) <= 8b, one
/// more byte when it fits in 8b + 8 bits, and a full word otherwise.
class ByteSizes {
public:
    explicit constexpr ByteSizes(unsigned value_bits) noexcept
        : base_((value_bits + 7) / 8), slack_(8 * base_ - value_bits) {
        if (base_ >= 8) {
            base_ = 8;
            extra_shift_ = kWordBits - 1;
            full_shift_ = kWordBits - 1;
            full_extra_ = 0;
        } else {
            extra_shift_ = slack_ + 1;
            full_shift_ = slack_ + 9;
            full_extra_ = kWordBits / 8 - base_ - 1;
        }
    }

    constexpr unsigned base() const noexcept { return base_; }
    constexpr unsigned slack() const noexcept { return slack_; }

    constexpr unsigned size(std::size_t j) const noexcept {
        const unsigned r = rho(j);
        if (base_ >= 8) return 8;
        if (r <= slack_) return base_;
        if (r <= slack_ + 8) return base_ + 1;
        return kWordBits / 8;
    }

    /// Bytes used by the first count nodes, excluding holes.
    constexpr std::size_t total(std::size_t count) const noexcept {
        return count * base_ + (count >> extra_shift_) + (count >> full_shift_) * full_extra_;
    }

    constexpr std::size_t offset(std::size_t j, unsigned hole_log) const noexcept {
        return total(j - 1) + 8 * holes_before(j - 1, hole_log);
    }

private:
    unsigned base_;
    unsigned slack_;
    unsigned extra_shift_ = 0;
    unsigned full_shift_ = 0;
    unsigned full_extra_ = 0;
};

}  // namespace classical

/// One 64-bit word per node, node j at word j + (j >> hole_log); word 0 is unused.
class FixedFenwick : public FenwickBase<FixedFenwick> {
public:
    explicit FixedFenwick(std::uint64_t bound, TreeOptions opts = {})
        : FenwickBase(bound), hole_log_(opts.hole_log), tree_(1, 0) {}

    FixedFenwick(std::uint64_t bound, std::span<const std::uint64_t> values, TreeOptions opts = {})
        : FixedFenwick(bound, opts) {
        tree_.reserve(position(values.size()) + 1);
        assign(values);
    }

    std::size_t storage_bits() const noexcept { return tree_.size() * kWordBits; }
    unsigned hole_log() const noexcept { return hole_log_; }

    std::size_t position(std::size_t j) const noexcept { return j + holes_before(j, hole_log_); }

    word_t node(std::size_t j, unsigned) const noexcept { return tree_[position(j)]; }
    void node_add(std::size_t j, unsigned, word_t delta) noexcept { tree_[position(j)] += delta; }

    void append_node(std::size_t j, word_t value) {
        const std::size_t pos = position(j);
        tree_.resize(pos + 1, 0);
        tree_[pos] = value;
    }

    void drop_node(std::size_t j) { tree_.resize(position(j - 1) + 1); }

private:
    unsigned hole_log_;
    std::vector<word_t> tree_;
};

/// Byte-aligned fields of one of three sizes.
class ByteFenwick : public FenwickBase<ByteFenwick> {
public:
    explicit ByteFenwick(std::uint64_t bound, TreeOptions opts = {})
        : FenwickBase(bound), sizes_(bound_width(bound)), hole_log_(opts.hole_log) {}

    ByteFenwick(std::uint64_t bound, std::span<const std::uint64_t> values, TreeOptions opts = {})
        : ByteFenwick(bound, opts) {
        if (!values.empty()) store_.reserve(8 * end_byte(values.size()));
        assign(values);
    }

    std::size_t storage_bits() const noexcept { return store_.storage_bits(); }
    unsigned hole_log() const noexcept { return hole_log_; }
    const classical::ByteSizes& sizes() const noexcept { return sizes_; }

    std::size_t byte_offset(std::size_t j) const noexcept { return sizes_.offset(j, hole_log_); }
    unsigned byte_size(std::size_t j) const noexcept { return sizes_.size(j); }

    word_t node(std::size_t j, unsigned) const {
        const std::size_t bit = 8 * byte_offset(j);
        return store_.read_bits_in_window(bit, bit, 8 * byte_size(j));
    }

    void node_add(std::size_t j, unsigned, word_t delta) {
        const std::size_t bit = 8 * byte_offset(j);
        const unsigned width = 8 * byte_size(j);
        const word_t value = store_.read_bits_in_window(bit, bit, width) + delta;
        CFT_EXPECTS(width == kWordBits || (value >> width) == 0, "partial sum exceeds its field");
        store_.write_bits(bit, width, value);
    }

    void append_node(std::size_t j, word_t value) {
        store_.grow(8 * end_byte(j));
        store_.write_bits(8 * byte_offset(j), 8 * byte_size(j), value);
    }

    void drop_node(std::size_t j) { store_.truncate(8 * end_byte(j - 1)); }

private:
    std::size_t end_byte(std::size_t n) const noexcept {
        return n == 0 ? 0 : byte_offset(n) + byte_size(n);
    }

    classical::ByteSizes sizes_;
    unsigned hole_log_;
    BitStore store_;
};

/// Bit-compressed fields of S + rho(j) bits.  Requires S <= 55 so that every
/// field is reachable with a single 8-byte load.
class BitFenwick : public FenwickBase<BitFenwick> {
public:
    static constexpr unsigned kMaxValueBits = kWordBits - 9;

    explicit BitFenwick(std::uint64_t bound, TreeOptions opts = {})
        : FenwickBase(bound), value_bits_(bound_width(bound)), hole_log_(opts.hole_log), store_(1) {
        if (value_bits_ > kMaxValueBits)
            throw std::invalid_argument("BitFenwick: bound needs more than 55 bits");
    }

    BitFenwick(std::uint64_t bound, std::span<const std::uint64_t> values, TreeOptions opts = {})
        : BitFenwick(bound, opts) {
        store_.reserve(classical::bit_storage(values.size(), value_bits_, hole_log_));
        assign(values);
    }

    std::size_t storage_bits() const noexcept { return store_.storage_bits(); }
    /// Bits of the layout before rounding to whole words.
    std::size_t used_bits() const noexcept { return store_.size(); }
    unsigned value_bits() const noexcept { return value_bits_; }
    unsigned hole_log() const noexcept { return hole_log_; }

    classical::BitField field(std::size_t j) const noexcept {
        return classical::bit_field(j, value_bits_, hole_log_);
    }

    word_t node(std::size_t j, unsigned level) const {
        const std::size_t anchor = j * (value_bits_ + 1);
        const std::size_t hole_bits = kWordBits * holes_before(j, hole_log_);
        const unsigned width = value_bits_ + level;
        const std::size_t start = anchor - nu(j) + 1 - width + hole_bits;
        if (anchor % kWordBits == 0) return store_.read_bits_aligned(start, width);
        if (anchor % 8 == 0) {
            const std::size_t window = anchor >= kWordBits ? anchor - kWordBits + hole_bits : hole_bits;
            return store_.read_bits_in_window(window, start, width);
        }
        return store_.read_bits_in_window(start & ~std::size_t{7}, start, width);
    }

    void node_add(std::size_t j, unsigned level, word_t delta) {
        const auto [offset, width] = field(j);
        const word_t value = node(j, level) + delta;
        CFT_EXPECTS(width == kWordBits || (value >> width) == 0, "partial sum exceeds its field");
        store_.write_bits(offset, width, value);
    }

    void append_node(std::size_t j, word_t value) {
        if (value_bits_ + rho(j) > kWordBits) throw std::length_error("BitFenwick: partial sums exceed 64 bits");
        store_.grow(classical::bit_storage(j, value_bits_, hole_log_));
        const auto [offset, width] = field(j);
        store_.write_bits(offset, width, value);
    }

    void drop_node(std::size_t j) { store_.truncate(classical::bit_storage(j - 1, value_bits_, hole_log_)); }

private:
    unsigned value_bits_;
    unsigned hole_log_;
    BitStore store_;
};

}  // namespace cft
