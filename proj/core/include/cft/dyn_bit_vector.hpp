#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cft/bitops.hpp"
#include "cft/fenwick/common.hpp"
#include "cft/fenwick/variant.hpp"

namespace cft {

inline constexpr std::size_t kDefaultBlockWords = 16;

/// Growable bit vector with rank and select on ones and zeros.  Bits are
/// grouped in blocks of 64 * W bits; a Fenwick tree with bound q = 64 * W
/// holds the popcount of each block.  In-block work is a linear word scan.
template <FenwickTree Tree>
class DynamicBitVector {
public:
    explicit DynamicBitVector(std::size_t block_words = kDefaultBlockWords, TreeOptions opts = {})
        : block_words_(check_block_words(block_words)), tree_(block_bits(), opts) {}

    /// Takes the first len bits of words.
    DynamicBitVector(std::span<const word_t> words, std::size_t len, std::size_t block_words = kDefaultBlockWords,
                     TreeOptions opts = {})
        : block_words_(check_block_words(block_words)),
          words_(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(words_for(checked_len(words, len)))),
          len_(len),
          tree_(block_bits(), block_counts(), opts) {}

    static DynamicBitVector filled(std::size_t len, bool bit, std::size_t block_words = kDefaultBlockWords,
                                   TreeOptions opts = {}) {
        std::vector<word_t> words(words_for(len), bit ? kAllOnes : 0);
        if (bit && len % kWordBits != 0) words.back() = (word_t{1} << (len % kWordBits)) - 1;
        return DynamicBitVector(words, len, block_words, opts);
    }

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }
    std::size_t block_words() const noexcept { return block_words_; }
    std::size_t block_bits() const noexcept { return block_words_ * kWordBits; }
    std::size_t block_count() const noexcept { return tree_.size(); }
    std::size_t count_ones() const { return tree_.prefix(tree_.size()); }
    std::size_t count_zeros() const { return len_ - count_ones(); }

    std::span<const word_t> words() const noexcept { return words_; }
    const Tree& tree() const noexcept { return tree_; }

    /// Payload words plus tree storage.
    std::size_t storage_bits() const noexcept { return words_.size() * kWordBits + tree_.storage_bits(); }

    /// Ones in [0, p).
    std::size_t rank(std::size_t p) const {
        if (p > len_) throw std::out_of_range("rank: position exceeds length");
        const std::size_t block = p / block_bits();
        std::size_t r = tree_.prefix(block);
        const std::size_t last = p / kWordBits;
        for (std::size_t w = block * block_words_; w < last; ++w) r += nu(words_[w]);
        if (p % kWordBits != 0) r += rank_in_word(words_[last], p % kWordBits);
        return r;
    }

    std::size_t rank0(std::size_t p) const { return p - rank(p); }

    /// Position of the (k+1)-th one.
    std::size_t select(std::size_t k) const {
        if (k >= count_ones()) throw std::out_of_range("select: rank exceeds number of ones");
        auto [block, residual] = tree_.find(k);
        for (std::size_t w = block * block_words_;; ++w) {
            const unsigned ones = nu(words_[w]);
            if (residual < ones)
                return w * kWordBits + detail::select_in_word_unchecked(words_[w], static_cast<unsigned>(residual));
            residual -= ones;
        }
    }

    /// Position of the (k+1)-th zero.
    std::size_t select0(std::size_t k) const {
        if (k >= count_zeros()) throw std::out_of_range("select0: rank exceeds number of zeros");
        auto [block, residual] = tree_.find_complement(k);
        for (std::size_t w = block * block_words_;; ++w) {
            const word_t flipped = ~words_[w];
            const unsigned zeros = nu(flipped);
            if (residual < zeros)
                return w * kWordBits + detail::select_in_word_unchecked(flipped, static_cast<unsigned>(residual));
            residual -= zeros;
        }
    }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }

    bool operator[](std::size_t i) const { return get(i); }

    void set(std::size_t i) {
        check_index(i);
        word_t& w = words_[i / kWordBits];
        const word_t bit = word_t{1} << (i % kWordBits);
        if (w & bit) return;
        w |= bit;
        tree_.add(i / block_bits() + 1, 1);
    }

    void clear(std::size_t i) {
        check_index(i);
        word_t& w = words_[i / kWordBits];
        const word_t bit = word_t{1} << (i % kWordBits);
        if (!(w & bit)) return;
        w &= ~bit;
        tree_.add(i / block_bits() + 1, -1);
    }

    /// Returns the previous value of bit i.
    bool flip(std::size_t i) {
        check_index(i);
        word_t& w = words_[i / kWordBits];
        const word_t bit = word_t{1} << (i % kWordBits);
        const bool old = (w & bit) != 0;
        w ^= bit;
        tree_.add(i / block_bits() + 1, old ? -1 : 1);
        return old;
    }

    void push_back(bool b) {
        if (len_ % kWordBits == 0) words_.push_back(0);
        if (b) words_.back() |= word_t{1} << (len_ % kWordBits);
        if (len_ % block_bits() == 0) {
            tree_.push(b ? 1 : 0);
        } else if (b) {
            tree_.add(tree_.size(), 1);
        }
        ++len_;
    }

    bool pop_back() {
        if (len_ == 0) throw std::underflow_error("pop_back: empty bit vector");
        const std::size_t i = len_ - 1;
        const word_t bit = word_t{1} << (i % kWordBits);
        const bool old = (words_.back() & bit) != 0;
        words_.back() &= ~bit;
        --len_;
        if (len_ % block_bits() == 0) {
            tree_.pop();
        } else if (old) {
            tree_.add(tree_.size(), -1);
        }
        if (len_ % kWordBits == 0) words_.pop_back();
        return old;
    }

    /// True when every tree leaf equals the popcount of its block.
    bool leaves_consistent() const {
        if (tree_.size() != (len_ + block_bits() - 1) / block_bits()) return false;
        const auto counts = block_counts();
        for (std::size_t m = 0; m < counts.size(); ++m)
            if (tree_.get(m + 1) != counts[m]) return false;
        return true;
    }

private:
    static constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

    static std::size_t check_block_words(std::size_t w) {
        if (w == 0) throw std::invalid_argument("block size must be at least one word");
        return w;
    }

    static std::size_t checked_len(std::span<const word_t> words, std::size_t len) {
        if (words_for(len) > words.size()) throw std::invalid_argument("bit vector length exceeds the supplied words");
        return len;
    }

    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("bit index out of range");
    }

    /// Popcount of every block; also clears padding past len.
    std::vector<std::uint64_t> block_counts() {
        if (len_ % kWordBits != 0) words_.back() &= (word_t{1} << (len_ % kWordBits)) - 1;
        return std::as_const(*this).block_counts();
    }

    std::vector<std::uint64_t> block_counts() const {
        std::vector<std::uint64_t> counts((len_ + block_bits() - 1) / block_bits(), 0);
        for (std::size_t w = 0; w < words_.size(); ++w) counts[w / block_words_] += nu(words_[w]);
        return counts;
    }

    std::size_t block_words_;
    std::vector<word_t> words_;
    std::size_t len_ = 0;
    Tree tree_;
};

/// Fixed 32-byte header preceding the little-endian word dump.
struct BitVectorHeader {
    static constexpr char kMagic[8] = {'C', 'F', 'T', 'D', 'Y', 'N', 'B', 'V'};
    static constexpr std::uint32_t kVersion = 1;

    std::uint64_t length = 0;
    std::uint32_t block_words = 0;
    TreeVariant variant{};
    std::uint32_t hole_log = kDefaultHoleLog;
};

void write_header(std::ostream& out, const BitVectorHeader& header);
BitVectorHeader read_header(std::istream& in);
void write_words(std::ostream& out, std::span<const word_t> words);
std::vector<word_t> read_words(std::istream& in, std::size_t count);

template <class Tree>
void save(std::ostream& out, const DynamicBitVector<Tree>& bv, TreeOptions opts = {}) {
    write_header(out, {bv.size(), static_cast<std::uint32_t>(bv.block_words()), variant_of_v<Tree>, opts.hole_log});
    write_words(out, bv.words());
}

template <class Tree>
DynamicBitVector<Tree> load(std::istream& in) {
    const BitVectorHeader h = read_header(in);
    if (h.variant != variant_of_v<Tree>) throw std::runtime_error("bit vector file was written with another backend");
    const auto words = read_words(in, (h.length + kWordBits - 1) / kWordBits);
    return DynamicBitVector<Tree>(words, h.length, h.block_words, TreeOptions{h.hole_log});
}

}  // namespace cft
