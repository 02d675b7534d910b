#pragma once

// Measurement harness.  Every timed loop chains its arguments: argument i is
// xored with the lowest bit of result i - 1, so consecutive calls cannot be
// overlapped by speculation.  Results are folded into a checksum that ends
// in a volatile sink to defeat dead-code elimination.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cft/fenwick/common.hpp"
#include "cft/fenwick/variant.hpp"

namespace cft::bench {

enum class Target { Fenwick, BitVector };

enum class Op { Prefix, Find, FindComplement, Get, Add, Rank, Rank0, Select, Select0, Update };

std::string to_string(Target t);
std::string to_string(Op op);
Target parse_target(std::string_view name);
Op parse_op(std::string_view name);
bool applies_to(Op op, Target t);

/// Ops measured when none are requested.
std::vector<Op> default_ops(Target t);

struct BenchConfig {
    Target target = Target::Fenwick;
    std::vector<TreeVariant> variants{kAllVariants.begin(), kAllVariants.end()};
    std::vector<Op> ops;
    std::vector<std::size_t> sizes;
    std::size_t block_words = 16;
    std::size_t queries = 1'000'000;
    std::uint64_t bound = 64;
    std::uint64_t seed = 0;
    bool sink = true;
    TreeOptions tree{};
};

struct BenchRecord {
    std::string variant;
    std::string op;
    std::size_t n = 0;
    std::size_t block_words = 0;
    double ns_per_op = 0;
    /// Sum of all results of the timed loop; independent of timing.
    std::uint64_t checksum = 0;
};

/// 2^lo, 2^(lo+1), ..., 2^hi.
std::vector<std::size_t> size_ladder(unsigned lo_exp, unsigned hi_exp);

/// Parses "ladder", "ladder:LO:HI", "large" (10^9, 10^10, 10^11) or a comma-separated list.
std::vector<std::size_t> parse_sizes(std::string_view text);

void validate(const BenchConfig& cfg);

/// One record per (size, variant, op), in that nesting order.
std::vector<BenchRecord> run(const BenchConfig& cfg);

/// Stores v into a volatile location.
void sink(std::uint64_t v) noexcept;

/// Runs op over args, xoring each argument with (previous result & chain_mask).
/// When trace is non-empty it receives the effective arguments.
template <class Fn>
std::uint64_t run_chained(std::span<const std::uint64_t> args, std::uint64_t chain_mask, Fn&& op,
                          std::span<std::uint64_t> trace = {}) {
    std::uint64_t previous = 0;
    std::uint64_t checksum = 0;
    if (trace.empty()) {
        for (const std::uint64_t a : args) {
            previous = op(a ^ (previous & chain_mask));
            checksum += previous;
        }
    } else {
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::uint64_t a = args[i] ^ (previous & chain_mask);
            trace[i] = a;
            previous = op(a);
            checksum += previous;
        }
    }
    return checksum;
}

struct SpaceReport {
    std::size_t elements = 0;          ///< tree elements or payload bits
    std::size_t storage_bits = 0;      ///< everything allocated for the structure
    double bits_per_element = 0;       ///< storage_bits / elements
};

/// Fenwick target: a tree of n elements with the given bound.  Bit vector
/// target: n payload bits in blocks of block_words words (bound ignored).
SpaceReport space_report(Target target, TreeVariant variant, std::size_t n, std::uint64_t bound,
                         std::size_t block_words, TreeOptions opts = {});

inline constexpr std::string_view kCsvHeader = "variant,op,n,block_words,ns_per_op";

void write_csv(std::ostream& out, std::span<const BenchRecord> records);
/// Writes to path; throws std::runtime_error naming the path on failure.
void write_csv(const std::string& path, std::span<const BenchRecord> records);
/// Parses what write_csv emits (checksums are not serialized).
std::vector<BenchRecord> read_csv(std::istream& in);

}  // namespace cft::bench
