#pragma once

// Level-order layouts: level l holds the nodes j with rho(j) = l, i.e. the
// classical indices (2k + 1) << l, in order of k.  Siblings probed by find
// are adjacent within their level.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cft/bit_store.hpp"
#include "cft/bitops.hpp"
#include "cft/contract.hpp"
#include "cft/fenwick/base.hpp"
#include "cft/fenwick/common.hpp"

namespace cft {

struct LevelPos {
    unsigned level = 0;
    std::size_t index = 0;

    friend bool operator==(const LevelPos&, const LevelPos&) = default;
};

namespace level {

constexpr LevelPos to_level(std::size_t j) noexcept {
    const unsigned l = rho(j);
    return {l, j >> (l + 1)};
}

constexpr std::size_t from_level(LevelPos pos) noexcept { return ((2 * pos.index) + 1) << pos.level; }

/// Stored nodes at level l in a tree of n nodes.
constexpr std::size_t node_count(std::size_t n, unsigned l) noexcept {
    return l >= kWordBits ? 0 : ((n >> l) + 1) / 2;
}

/// Children in the sideways heap; the right child may lie beyond n.
constexpr std::pair<LevelPos, LevelPos> children(LevelPos pos) noexcept {
    return {{pos.level - 1, 2 * pos.index}, {pos.level - 1, 2 * pos.index + 1}};
}

/// Interrogation-tree parent; empty when the parent is the root 0.
constexpr std::optional<LevelPos> parent_interrogation(LevelPos pos) noexcept {
    if (pos.index == 0) return std::nullopt;
    const unsigned r = rho(pos.index);
    return LevelPos{pos.level + 1 + r, pos.index >> (1 + r)};
}

/// Update-tree parent; empty when the parent index exceeds n.
constexpr std::optional<LevelPos> parent_update(LevelPos pos, std::size_t n) noexcept {
    const unsigned r = rho(~pos.index);
    if (pos.level + 1 + r >= kWordBits) return std::nullopt;
    const LevelPos parent{pos.level + 1 + r, pos.index >> (1 + r)};
    if (from_level(parent) > n) return std::nullopt;
    return parent;
}

}  // namespace level

enum class Compression { Fixed, Byte, Bit };

/// Level-order tree; every level is a separately grown allocation.
template <Compression C>
class LevelFenwick : public FenwickBase<LevelFenwick<C>> {
    using Base = FenwickBase<LevelFenwick<C>>;
    friend Base;

public:
    explicit LevelFenwick(std::uint64_t bound, TreeOptions = {})
        : Base(bound), value_bits_(bound_width(bound)) {}

    LevelFenwick(std::uint64_t bound, std::span<const std::uint64_t> values, TreeOptions opts = {})
        : LevelFenwick(bound, opts) {
        reserve(values.size());
        this->assign(values);
    }

    std::size_t levels() const noexcept { return levels_.size(); }
    std::size_t level_size(unsigned l) const noexcept { return l < levels_.size() ? levels_[l].count : 0; }

    /// Bits per node at level l.
    unsigned node_bits(unsigned l) const noexcept {
        if constexpr (C == Compression::Fixed) {
            return kWordBits;
        } else if constexpr (C == Compression::Byte) {
            return 8 * std::min(8U, (value_bits_ + l + 7) / 8);
        } else {
            return value_bits_ + l;
        }
    }

    /// Storage of every level plus one pointer per level.
    std::size_t storage_bits() const noexcept {
        std::size_t bits = 0;
        for (const auto& lv : levels_) {
            if constexpr (C == Compression::Fixed) {
                bits += lv.words.size() * kWordBits;
            } else {
                bits += lv.store.storage_bits();
            }
            bits += kWordBits;
        }
        return bits;
    }

    word_t node(std::size_t j, unsigned l) const {
        const auto& lv = levels_[l];
        const std::size_t k = j >> (l + 1);
        if constexpr (C == Compression::Fixed) {
            return lv.words[k];
        } else if constexpr (C == Compression::Byte) {
            const std::size_t bit = k * lv.width;
            return lv.store.read_bits_in_window(bit, bit, lv.width);
        } else {
            return lv.store.read_bits(k * lv.width, lv.width);
        }
    }

    word_t node_at(LevelPos pos) const { return node(level::from_level(pos), pos.level); }

    void node_add(std::size_t j, unsigned l, word_t delta) {
        auto& lv = levels_[l];
        const std::size_t k = j >> (l + 1);
        if constexpr (C == Compression::Fixed) {
            lv.words[k] += delta;
        } else {
            const word_t value = node(j, l) + delta;
            CFT_EXPECTS(lv.width == kWordBits || (value >> lv.width) == 0, "partial sum exceeds its field");
            lv.store.write_bits(k * lv.width, lv.width, value);
        }
    }

    void append_node(std::size_t j, word_t value) {
        const unsigned l = rho(j);
        if (l == levels_.size()) {
            if (node_bits(l) > kWordBits) throw std::length_error("LevelFenwick: partial sums exceed 64 bits");
            levels_.push_back(Level{node_bits(l)});
        }
        auto& lv = levels_[l];
        if constexpr (C == Compression::Fixed) {
            lv.words.push_back(value);
        } else {
            lv.store.grow((lv.count + 1) * lv.width);
            lv.store.write_bits(lv.count * lv.width, lv.width, value);
        }
        ++lv.count;
    }

    void drop_node(std::size_t j) {
        const unsigned l = rho(j);
        auto& lv = levels_[l];
        --lv.count;
        if constexpr (C == Compression::Fixed) {
            lv.words.pop_back();
        } else {
            lv.store.truncate(lv.count * lv.width);
        }
        while (!levels_.empty() && levels_.back().count == 0) levels_.pop_back();
    }

private:
    struct Level {
        explicit Level(unsigned w) : width(w) {}

        unsigned width;
        std::size_t count = 0;
        std::vector<word_t> words;
        BitStore store;
    };

    void reserve(std::size_t n) {
        if (n == 0) return;
        if (node_bits(msb_nonzero(n)) > kWordBits) return;  // append_node reports it
        for (unsigned l = 0; l <= msb_nonzero(n); ++l) {
            levels_.push_back(Level{node_bits(l)});
            if constexpr (C == Compression::Fixed) {
                levels_.back().words.reserve(level::node_count(n, l));
            } else {
                levels_.back().store.reserve(level::node_count(n, l) * node_bits(l));
            }
        }
    }

    unsigned value_bits_;
    std::vector<Level> levels_;
};

using FixedLevelFenwick = LevelFenwick<Compression::Fixed>;
using ByteLevelFenwick = LevelFenwick<Compression::Byte>;
using BitLevelFenwick = LevelFenwick<Compression::Bit>;

}  // namespace cft
