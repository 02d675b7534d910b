#pragma once

// Node sequences of the interrogation and update trees, bottom-up and
// top-down.  Used by tests and diagnostics; the tree classes inline the
// same arithmetic.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cft/bitops.hpp"

namespace cft::paths {

/// Parent in the interrogation tree: j with its lowest one cleared.
constexpr std::uint64_t interrogation_parent(std::uint64_t j) noexcept { return j & (j - 1); }

/// Parent in the update tree: j plus its lowest one.
constexpr std::uint64_t update_parent(std::uint64_t j) noexcept { return j + (j & (~j + 1)); }

/// Nodes visited when computing prefix(j), excluding the root 0.
inline std::vector<std::uint64_t> interrogation_path(std::uint64_t j) {
    std::vector<std::uint64_t> out;
    for (; j != 0; j = interrogation_parent(j)) out.push_back(j);
    return out;
}

/// Nodes visited by add at j in a tree of n nodes.
inline std::vector<std::uint64_t> update_path(std::uint64_t j, std::uint64_t n) {
    if (j == 0 || j > n) throw std::out_of_range("update_path: node outside [1..n]");
    std::vector<std::uint64_t> out;
    for (; j <= n; j = update_parent(j)) out.push_back(j);
    return out;
}

/// Root-to-leaf interrogation path towards p: j <- j | 1 << lambda(j xor p).
inline std::vector<std::uint64_t> interrogation_path_topdown(std::uint64_t p) {
    if (p == 0) throw std::out_of_range("interrogation_path_topdown: p must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t j = 0; j != p;) {
        j |= std::uint64_t{1} << msb_nonzero(j ^ p);
        out.push_back(j);
    }
    return out;
}

/// Root-to-leaf update path towards p, computed on negated indices.
inline std::vector<std::uint64_t> update_path_topdown(std::uint64_t p, std::uint64_t n) {
    if (p == 0 || p > n) throw std::out_of_range("update_path_topdown: p outside [1..n]");
    const std::uint64_t low_cleared = p & (p - 1);
    std::uint64_t j = (n ^ low_cleared) == 0 ? p : n & (kAllOnes << msb_nonzero(n ^ low_cleared));
    std::vector<std::uint64_t> out{j};
    const std::uint64_t neg_p = ~p + 1;
    std::uint64_t neg_j = ~j + 1;
    while (j != p) {
        neg_j ^= std::uint64_t{1} << msb_nonzero(neg_j ^ neg_p);
        j = ~neg_j + 1;
        out.push_back(j);
    }
    return out;
}

}  // namespace cft::paths
