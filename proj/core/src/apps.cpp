#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cft/apps/permutation.hpp"
#include "cft/apps/pref_attach.hpp"
#include "cft/apps/random.hpp"
#include "cft/apps/transpositions.hpp"

namespace cft::apps {

void validate_permutation(std::span<const std::uint64_t> pi) {
    std::vector<bool> seen(pi.size(), false);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        const std::uint64_t x = pi[i];
        if (x >= pi.size())
            throw std::invalid_argument("permutation entry " + std::to_string(i) + " is out of range");
        if (seen[x]) throw std::invalid_argument("permutation value " + std::to_string(x) + " repeats");
        seen[x] = true;
    }
}

Permutation invert(std::span<const std::uint64_t> pi) {
    validate_permutation(pi);
    Permutation inverse(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) inverse[pi[i]] = i;
    return inverse;
}

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
    Permutation pi(n);
    for (std::size_t i = 0; i < n; ++i) pi[i] = i;
    SplitMix64 rng(seed);
    for (std::size_t i = n; i > 1; --i) std::swap(pi[i - 1], pi[rng.below(i)]);
    return pi;
}

Permutation read_permutation(std::istream& in) {
    Permutation pi;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(line.substr(first), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": not an integer");
        }
        if (line.find_first_not_of(" \t\r", first + used) != std::string::npos || line[first] == '-')
            throw std::invalid_argument("line " + std::to_string(lineno) + ": not an integer");
        pi.push_back(value);
    }
    validate_permutation(pi);
    return pi;
}

std::uint64_t count_transpositions(std::span<const std::uint64_t> pi, TreeVariant variant, std::size_t block_words) {
    return dispatch_variant(variant, [&]<class Tree>(std::type_identity<Tree>) {
        return count_transpositions<Tree>(pi, block_words);
    });
}

void validate(const PAConfig& cfg) {
    if (cfg.degree == 0) throw std::invalid_argument("preferential attachment: d must be positive");
    if (cfg.seed_vertices < cfg.degree) throw std::invalid_argument("preferential attachment: need d0 >= d");
    if (cfg.vertices < cfg.seed_vertices) throw std::invalid_argument("preferential attachment: need n >= d0");
}

PAGraph generate_pa(const PAConfig& cfg, TreeVariant variant) {
    return dispatch_variant(variant, [&]<class Tree>(std::type_identity<Tree>) { return generate_pa<Tree>(cfg); });
}

void write_edges(std::ostream& out, const EdgeList& edges) {
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    if (!out) throw std::runtime_error("failed to write edge list");
}

}  // namespace cft::apps
