#pragma once

#include <cstdint>
#include <span>

#include "cft/apps/permutation.hpp"
#include "cft/dyn_bit_vector.hpp"

namespace cft::apps {

/// Number of transpositions (inversions) generating pi.  Scans the inverse,
/// summing the rank of each element among those not yet removed.
template <FenwickTree Tree>
std::uint64_t count_transpositions(std::span<const std::uint64_t> pi, std::size_t block_words = kDefaultBlockWords) {
    validate_permutation(pi);
    const Permutation inverse = invert(pi);
    auto bv = DynamicBitVector<Tree>::filled(pi.size(), true, block_words);
    std::uint64_t total = 0;
    for (const std::uint64_t x : inverse) {
        total += bv.rank(x);
        bv.clear(x);
    }
    return total;
}

std::uint64_t count_transpositions(std::span<const std::uint64_t> pi, TreeVariant variant,
                                   std::size_t block_words = kDefaultBlockWords);

}  // namespace cft::apps
