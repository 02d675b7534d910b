#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace cft::apps {

using Permutation = std::vector<std::uint64_t>;

/// Throws std::invalid_argument unless pi is a bijection of [0, n).
void validate_permutation(std::span<const std::uint64_t> pi);

Permutation invert(std::span<const std::uint64_t> pi);

/// Fisher-Yates shuffle of the identity driven by SplitMix64(seed).
Permutation random_permutation(std::size_t n, std::uint64_t seed);

/// One integer per line; blank lines are ignored.  Validates the result.
Permutation read_permutation(std::istream& in);

}  // namespace cft::apps
