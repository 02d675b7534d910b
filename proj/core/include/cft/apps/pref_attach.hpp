#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cft/apps/random.hpp"
#include "cft/fenwick/variant.hpp"

namespace cft::apps {

struct PAConfig {
    std::uint64_t vertices = 0;   ///< final vertex count n
    std::uint64_t degree = 1;     ///< edges per new vertex d
    std::uint64_t seed_vertices = 1;  ///< d0 >= d initial vertices with a self-loop
    std::uint64_t seed = 0;
};

using Edge = std::pair<std::uint64_t, std::uint64_t>;
using EdgeList = std::vector<Edge>;

void validate(const PAConfig& cfg);

struct PAGraph {
    EdgeList edges;
    /// Degree of each vertex as tracked by the tree.
    std::vector<std::uint64_t> degrees;
    /// prefix(n) of the degree tree at the end of generation.
    std::uint64_t degree_sum = 0;
};

/// Preferential attachment: each new vertex draws d targets by find on a
/// uniform sample of [0, 2m), bumping each target's degree right after the
/// draw, and is then pushed with degree d.
template <FenwickTree Tree>
PAGraph generate_pa(const PAConfig& cfg) {
    validate(cfg);
    Tree tree(2 * cfg.degree * cfg.vertices);
    SplitMix64 rng(cfg.seed);
    PAGraph g;
    g.edges.reserve(cfg.seed_vertices + (cfg.vertices - cfg.seed_vertices) * cfg.degree);
    for (std::uint64_t v = 0; v < cfg.seed_vertices; ++v) {
        tree.push(2);
        g.edges.emplace_back(v, v);
    }
    std::uint64_t edges = cfg.seed_vertices;
    for (std::uint64_t v = cfg.seed_vertices; v < cfg.vertices; ++v) {
        for (std::uint64_t t = 0; t < cfg.degree; ++t) {
            const std::uint64_t target = tree.find(rng.below(2 * edges)).length;
            tree.add(target + 1, 1);
            g.edges.emplace_back(v, target);
        }
        tree.push(cfg.degree);
        edges += cfg.degree;
    }
    g.degree_sum = tree.prefix(tree.size());
    g.degrees.reserve(tree.size());
    for (std::size_t j = 1; j <= tree.size(); ++j) g.degrees.push_back(tree.get(j));
    return g;
}

PAGraph generate_pa(const PAConfig& cfg, TreeVariant variant);

/// "u v" per line in generation order.
void write_edges(std::ostream& out, const EdgeList& edges);

}  // namespace cft::apps
