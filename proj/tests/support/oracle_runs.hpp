#pragma once

// Randomized differential drivers shared by the unit tests and the
// acceptance runner.  Each returns an empty string on success and a
// description of the first disagreement otherwise.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cft/dyn_bit_vector.hpp"
#include "cft/fenwick.hpp"

namespace cft::testing {

template <class... Args>
std::string describe(const Args&... args) {
    std::ostringstream out;
    (out << ... << args);
    return out.str();
}

/// One random operation sequence against NaiveFenwick.
template <class Tree>
std::string fenwick_sequence(std::uint64_t seed, std::size_t max_n, std::uint64_t bound, std::size_t ops,
                             TreeOptions opts = {}) {
    std::mt19937_64 rng(seed);
    const std::size_t n0 = rng() % (max_n + 1);
    std::vector<std::uint64_t> init(n0);
    for (auto& v : init) v = rng() % (bound + 1);

    NaiveFenwick oracle(bound, init);
    Tree tree = (seed % 2 == 0) ? Tree(bound, init, opts) : Tree(bound, opts);
    if (seed % 2 != 0)
        for (auto v : init) tree.push(v);

    auto total = [&] { return oracle.prefix(oracle.size()); };
    for (std::size_t step = 0; step < ops; ++step) {
        const std::size_t n = oracle.size();
        if (tree.size() != n) return describe("size ", tree.size(), " != ", n, " at step ", step);
        switch (rng() % 8) {
            case 0: {
                const std::size_t p = rng() % (n + 1);
                if (tree.prefix(p) != oracle.prefix(p)) return describe("prefix(", p, ") at step ", step);
                break;
            }
            case 1: {
                const std::uint64_t x = rng() % (total() + bound + 1);
                if (!(tree.find(x) == oracle.find(x))) return describe("find(", x, ") at step ", step);
                break;
            }
            case 2: {
                const std::uint64_t x = rng() % (n * bound - total() + bound + 1);
                if (!(tree.find_complement(x) == oracle.find_complement(x)))
                    return describe("find_complement(", x, ") at step ", step);
                break;
            }
            case 3: {
                if (n == 0) break;
                const std::size_t j = 1 + rng() % n;
                if (tree.get(j) != oracle.get(j)) return describe("get(", j, ") at step ", step);
                break;
            }
            case 4: {
                if (n == 0) break;
                const std::size_t j = 1 + rng() % n;
                const auto target = static_cast<std::int64_t>(rng() % (bound + 1));
                const std::int64_t delta = target - static_cast<std::int64_t>(oracle.get(j));
                oracle.add(j, delta);
                tree.add(j, delta);
                break;
            }
            case 5:
                if (n < max_n) {
                    const std::uint64_t v = rng() % (bound + 1);
                    oracle.push(v);
                    tree.push(v);
                }
                break;
            case 6:
                if (n > 0) {
                    oracle.pop();
                    tree.pop();
                }
                break;
            default: {
                // Extreme arguments: beyond the total and at the boundaries.
                const std::uint64_t x = total();
                if (!(tree.find(x) == oracle.find(x))) return describe("find(total) at step ", step);
                if (!(tree.find(0) == oracle.find(0))) return describe("find(0) at step ", step);
                const std::uint64_t c = n * bound - x;
                if (!(tree.find_complement(c) == oracle.find_complement(c)))
                    return describe("find_complement(total) at step ", step);
                break;
            }
        }
    }
    for (std::size_t j = 1; j <= oracle.size(); ++j) {
        if (tree.get(j) != oracle.get(j)) return describe("final get(", j, ")");
        if (tree.prefix(j) != oracle.prefix(j)) return describe("final prefix(", j, ")");
    }
    return {};
}

/// Plain bit list with every query answered by recounting.
class NaiveBits {
public:
    explicit NaiveBits(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    std::size_t size() const { return bits_.size(); }
    std::size_t rank(std::size_t p) const {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(p), 1));
    }
    std::size_t ones() const { return rank(size()); }
    std::size_t select(std::size_t k, std::uint8_t bit) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] == bit && k-- == 0) return i;
        return bits_.size();
    }
    bool get(std::size_t i) const { return bits_[i] != 0; }
    void put(std::size_t i, bool b) { bits_[i] = b ? 1 : 0; }
    void push(bool b) { bits_.push_back(b ? 1 : 0); }
    void pop() { bits_.pop_back(); }

private:
    std::vector<std::uint8_t> bits_;
};

/// One random operation sequence on a bit vector of about len bits.
template <class Tree>
std::string bitvector_sequence(std::uint64_t seed, std::size_t len, std::size_t block_words, std::size_t ops,
                               TreeOptions opts = {}) {
    std::mt19937_64 rng(seed);
    // Mix dense, sparse and balanced content.
    const unsigned density = static_cast<unsigned>(rng() % 3);
    std::vector<word_t> words((len + 63) / 64);
    for (auto& w : words) w = density == 0 ? rng() & rng() & rng() : density == 1 ? rng() : rng() | rng() | rng();
    std::vector<std::uint8_t> bits(len);
    for (std::size_t i = 0; i < len; ++i) bits[i] = (words[i / 64] >> (i % 64)) & 1U;

    NaiveBits oracle(std::move(bits));
    DynamicBitVector<Tree> bv(words, len, block_words, opts);
    for (std::size_t step = 0; step < ops; ++step) {
        const std::size_t n = oracle.size();
        if (bv.size() != n) return describe("size at step ", step);
        switch (rng() % 10) {
            case 0: {
                const std::size_t p = rng() % (n + 1);
                if (bv.rank(p) != oracle.rank(p)) return describe("rank(", p, ") at step ", step);
                break;
            }
            case 1: {
                const std::size_t p = rng() % (n + 1);
                if (bv.rank0(p) != p - oracle.rank(p)) return describe("rank0(", p, ") at step ", step);
                break;
            }
            case 2: {
                const std::size_t ones = oracle.ones();
                if (bv.count_ones() != ones) return describe("count_ones at step ", step);
                if (ones == 0) break;
                const std::size_t k = rng() % ones;
                if (bv.select(k) != oracle.select(k, 1)) return describe("select(", k, ") at step ", step);
                break;
            }
            case 3: {
                const std::size_t zeros = n - oracle.ones();
                if (zeros == 0) break;
                const std::size_t k = rng() % zeros;
                if (bv.select0(k) != oracle.select(k, 0)) return describe("select0(", k, ") at step ", step);
                break;
            }
            case 4: {
                if (n == 0) break;
                const std::size_t i = rng() % n;
                if (bv.get(i) != oracle.get(i)) return describe("get(", i, ") at step ", step);
                break;
            }
            case 5: {
                if (n == 0) break;
                const std::size_t i = rng() % n;
                bv.set(i);
                oracle.put(i, true);
                break;
            }
            case 6: {
                if (n == 0) break;
                const std::size_t i = rng() % n;
                bv.clear(i);
                oracle.put(i, false);
                break;
            }
            case 7: {
                if (n == 0) break;
                const std::size_t i = rng() % n;
                const bool old = bv.flip(i);
                if (old != oracle.get(i)) return describe("flip(", i, ") old bit at step ", step);
                oracle.put(i, !old);
                break;
            }
            case 8: {
                const bool b = rng() & 1U;
                bv.push_back(b);
                oracle.push(b);
                break;
            }
            default:
                if (n > 0) {
                    const bool old = bv.pop_back();
                    if (old != oracle.get(n - 1)) return describe("pop_back value at step ", step);
                    oracle.pop();
                }
                break;
        }
    }
    if (!bv.leaves_consistent()) return "block counts drifted from the tree";
    const std::size_t n = oracle.size();
    const std::size_t probes = std::min<std::size_t>(n, 64);
    for (std::size_t t = 0; t <= probes; ++t) {
        const std::size_t p = probes == 0 ? 0 : t * n / probes;
        if (bv.rank(p) != oracle.rank(p)) return describe("final rank(", p, ")");
    }
    return {};
}

/// Quadratic inversion count.
inline std::uint64_t inversions_oracle(const std::vector<std::uint64_t>& pi) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j) count += pi[i] > pi[j];
    return count;
}

}  // namespace cft::testing
