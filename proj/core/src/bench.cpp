#include "cft/bench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cft/apps/random.hpp"
#include "cft/dyn_bit_vector.hpp"

namespace cft::bench {

namespace {

constexpr std::pair<Op, std::string_view> kOpNames[] = {
    {Op::Prefix, "prefix"}, {Op::Find, "find"},   {Op::FindComplement, "find_complement"},
    {Op::Get, "get"},       {Op::Add, "add"},     {Op::Rank, "rank"},
    {Op::Rank0, "rank0"},   {Op::Select, "select"}, {Op::Select0, "select0"},
    {Op::Update, "update"},
};

struct ArgStream {
    std::vector<std::uint64_t> args;
    std::uint64_t chain_mask = 0;
};

std::uint64_t stream_seed(std::uint64_t seed, std::size_t n, Op op) {
    apps::SplitMix64 mix(seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL));
    mix.next();
    return mix.next() ^ static_cast<std::uint64_t>(op);
}

/// Arguments uniform over [0, domain).  The range is trimmed to an even
/// length so that flipping the lowest bit stays inside the domain.
ArgStream uniform_stream(std::uint64_t seed, std::uint64_t domain, std::size_t count) {
    apps::SplitMix64 rng(seed);
    ArgStream s;
    std::uint64_t range = std::max<std::uint64_t>(domain, 1);
    if (range >= 2) {
        range &= ~std::uint64_t{1};
        s.chain_mask = 1;
    }
    s.args.resize(count);
    for (auto& a : s.args) a = range == 1 ? 0 : rng.below(range);
    return s;
}

std::size_t warmup_count(std::size_t queries) { return (queries / 10) & ~std::size_t{1}; }

template <class Fn>
BenchRecord measure(const BenchConfig& cfg, const ArgStream& s, Fn&& op) {
    const std::span<const std::uint64_t> args(s.args);
    const std::uint64_t warm = run_chained(args.first(warmup_count(args.size())), s.chain_mask, op);
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t checksum = run_chained(args, s.chain_mask, op);
    const auto stop = std::chrono::steady_clock::now();
    if (cfg.sink) sink(checksum ^ warm);
    const auto ns = std::max<std::int64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(), 1);
    BenchRecord r;
    r.ns_per_op = static_cast<double>(ns) / static_cast<double>(args.size());
    r.checksum = checksum;
    return r;
}

template <class Tree>
void run_fenwick(const BenchConfig& cfg, std::size_t n, std::vector<BenchRecord>& out) {
    apps::SplitMix64 rng(cfg.seed ^ n);
    std::vector<std::uint64_t> values(n);
    for (auto& v : values) v = rng.below(cfg.bound + 1);
    Tree tree(cfg.bound, values, cfg.tree);
    values = {};

    for (const Op op : cfg.ops) {
        const std::uint64_t seed = stream_seed(cfg.seed, n, op);
        const std::uint64_t total = tree.prefix(n);
        BenchRecord r;
        switch (op) {
            case Op::Prefix:
                r = measure(cfg, uniform_stream(seed, n + 1, cfg.queries),
                            [&tree](std::uint64_t p) { return tree.prefix(p); });
                break;
            case Op::Find:
                r = measure(cfg, uniform_stream(seed, total, cfg.queries),
                            [&tree](std::uint64_t x) { return std::uint64_t{tree.find(x).length}; });
                break;
            case Op::FindComplement:
                r = measure(cfg, uniform_stream(seed, n * cfg.bound - total, cfg.queries),
                            [&tree](std::uint64_t x) { return std::uint64_t{tree.find_complement(x).length}; });
                break;
            case Op::Get:
                r = measure(cfg, uniform_stream(seed, n, cfg.queries),
                            [&tree](std::uint64_t j) { return tree.get(j + 1); });
                break;
            case Op::Add: {
                // Pairs of opposite unit updates on one position keep every value in [0, bound].
                ArgStream s = uniform_stream(seed, n, cfg.queries);
                s.chain_mask = 0;
                for (std::size_t i = 0; i < s.args.size(); i += 2) {
                    const std::uint64_t pos = s.args[i];
                    const bool down_first = tree.get(pos + 1) == cfg.bound;
                    s.args[i] = (pos << 1) | (down_first ? 1 : 0);
                    if (i + 1 < s.args.size()) s.args[i + 1] = (pos << 1) | (down_first ? 0 : 1);
                }
                r = measure(cfg, s, [&tree](std::uint64_t a) {
                    tree.add((a >> 1) + 1, (a & 1) ? -1 : 1);
                    return std::uint64_t{0};
                });
                break;
            }
            default:
                throw std::invalid_argument("op " + to_string(op) + " does not apply to Fenwick trees");
        }
        r.op = to_string(op);
        out.push_back(std::move(r));
    }
}

template <class Tree>
void run_bitvec(const BenchConfig& cfg, std::size_t n, std::vector<BenchRecord>& out) {
    apps::SplitMix64 rng(cfg.seed ^ n);
    std::vector<word_t> words((n + kWordBits - 1) / kWordBits);
    for (auto& w : words) w = rng.next();
    if (!words.empty()) words[0] = (words[0] | 1U) & ~word_t{2};  // at least one one and one zero
    DynamicBitVector<Tree> bv(words, n, cfg.block_words, cfg.tree);
    words = {};

    for (const Op op : cfg.ops) {
        const std::uint64_t seed = stream_seed(cfg.seed, n, op);
        BenchRecord r;
        switch (op) {
            case Op::Rank:
                r = measure(cfg, uniform_stream(seed, n + 1, cfg.queries),
                            [&bv](std::uint64_t p) { return std::uint64_t{bv.rank(p)}; });
                break;
            case Op::Rank0:
                r = measure(cfg, uniform_stream(seed, n + 1, cfg.queries),
                            [&bv](std::uint64_t p) { return std::uint64_t{bv.rank0(p)}; });
                break;
            case Op::Select:
                r = measure(cfg, uniform_stream(seed, bv.count_ones(), cfg.queries),
                            [&bv](std::uint64_t k) { return std::uint64_t{bv.select(k)}; });
                break;
            case Op::Select0:
                r = measure(cfg, uniform_stream(seed, bv.count_zeros(), cfg.queries),
                            [&bv](std::uint64_t k) { return std::uint64_t{bv.select0(k)}; });
                break;
            case Op::Update:
                r = measure(cfg, uniform_stream(seed, n, cfg.queries),
                            [&bv](std::uint64_t i) { return std::uint64_t{bv.flip(i)}; });
                break;
            default:
                throw std::invalid_argument("op " + to_string(op) + " does not apply to bit vectors");
        }
        r.op = to_string(op);
        out.push_back(std::move(r));
    }
}

}  // namespace

std::string to_string(Target t) { return t == Target::Fenwick ? "fenwick" : "bitvec"; }

std::string to_string(Op op) {
    for (const auto& [o, name] : kOpNames)
        if (o == op) return std::string(name);
    return "?";
}

Target parse_target(std::string_view name) {
    if (name == "fenwick") return Target::Fenwick;
    if (name == "bitvec") return Target::BitVector;
    throw std::invalid_argument("unknown target '" + std::string(name) + "' (expected fenwick or bitvec)");
}

Op parse_op(std::string_view name) {
    for (const auto& [o, n] : kOpNames)
        if (n == name) return o;
    if (name == "findc") return Op::FindComplement;
    if (name == "flip") return Op::Update;
    throw std::invalid_argument("unknown op '" + std::string(name) + "'");
}

bool applies_to(Op op, Target t) {
    switch (op) {
        case Op::Prefix:
        case Op::Find:
        case Op::FindComplement:
        case Op::Get:
        case Op::Add:
            return t == Target::Fenwick;
        default:
            return t == Target::BitVector;
    }
}

std::vector<Op> default_ops(Target t) {
    if (t == Target::Fenwick) return {Op::Prefix, Op::Find, Op::Add};
    return {Op::Rank, Op::Select, Op::Update};
}

std::vector<std::size_t> size_ladder(unsigned lo_exp, unsigned hi_exp) {
    if (lo_exp > hi_exp || hi_exp > 62) throw std::invalid_argument("size ladder exponents out of order");
    std::vector<std::size_t> sizes;
    for (unsigned e = lo_exp; e <= hi_exp; ++e) sizes.push_back(std::size_t{1} << e);
    return sizes;
}

std::vector<std::size_t> parse_sizes(std::string_view text) {
    if (text == "ladder") return size_ladder(10, 26);
    if (text == "large") return {1'000'000'000ULL, 10'000'000'000ULL, 100'000'000'000ULL};
    if (text.starts_with("ladder:")) {
        unsigned lo = 0, hi = 0;
        char colon = 0;
        std::istringstream in(std::string(text.substr(7)));
        if (!(in >> lo >> colon >> hi) || colon != ':' || !in.eof())
            throw std::invalid_argument("malformed size ladder '" + std::string(text) + "'");
        return size_ladder(lo, hi);
    }
    std::vector<std::size_t> sizes;
    std::istringstream in{std::string(text)};
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        std::size_t value = 0;
        try {
            value = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || item.front() == '-')
            throw std::invalid_argument("malformed size '" + item + "'");
        sizes.push_back(value);
    }
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    return sizes;
}

void validate(const BenchConfig& cfg) {
    if (cfg.queries == 0) throw std::invalid_argument("query count must be positive");
    if (cfg.sizes.empty()) throw std::invalid_argument("no sizes given");
    if (cfg.variants.empty()) throw std::invalid_argument("no variants given");
    if (cfg.bound == 0) throw std::invalid_argument("bound must be positive");
    if (cfg.block_words == 0) throw std::invalid_argument("block size must be positive");
    const std::size_t min_size = cfg.target == Target::BitVector ? 2 : 1;
    for (auto n : cfg.sizes)
        if (n < min_size) throw std::invalid_argument("sizes must be at least " + std::to_string(min_size));
    for (auto op : cfg.ops)
        if (!applies_to(op, cfg.target))
            throw std::invalid_argument("op " + to_string(op) + " does not apply to target " + to_string(cfg.target));
}

std::vector<BenchRecord> run(const BenchConfig& input) {
    BenchConfig cfg = input;
    if (cfg.ops.empty()) cfg.ops = default_ops(cfg.target);
    validate(cfg);
    std::vector<BenchRecord> records;
    for (const std::size_t n : cfg.sizes) {
        for (const TreeVariant v : cfg.variants) {
            const std::size_t first = records.size();
            dispatch_variant(v, [&]<class Tree>(std::type_identity<Tree>) {
                if (cfg.target == Target::Fenwick) {
                    run_fenwick<Tree>(cfg, n, records);
                } else {
                    run_bitvec<Tree>(cfg, n, records);
                }
            });
            for (std::size_t i = first; i < records.size(); ++i) {
                records[i].variant = to_string(v);
                records[i].n = n;
                records[i].block_words = cfg.target == Target::BitVector ? cfg.block_words : 0;
            }
        }
    }
    return records;
}

namespace {
volatile std::uint64_t sink_slot;
}  // namespace

void sink(std::uint64_t v) noexcept { sink_slot = v; }

SpaceReport space_report(Target target, TreeVariant variant, std::size_t n, std::uint64_t bound,
                         std::size_t block_words, TreeOptions opts) {
    if (n == 0) throw std::invalid_argument("space report needs a positive size");
    SpaceReport report;
    report.elements = n;
    dispatch_variant(variant, [&]<class Tree>(std::type_identity<Tree>) {
        if (target == Target::Fenwick) {
            Tree tree(bound, opts);
            for (std::size_t i = 0; i < n; ++i) tree.push(0);
            report.storage_bits = tree.storage_bits();
        } else {
            report.storage_bits = DynamicBitVector<Tree>::filled(n, false, block_words, opts).storage_bits();
        }
    });
    report.bits_per_element = static_cast<double>(report.storage_bits) / static_cast<double>(n);
    return report;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.variant << ',' << r.op << ',' << r.n << ',' << r.block_words << ',' << std::fixed
            << std::setprecision(3) << r.ns_per_op << '\n';
    }
}

void write_csv(const std::string& path, std::span<const BenchRecord> records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_csv(out, records);
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<BenchRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("missing CSV header");
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        BenchRecord r;
        std::string n, w, ns;
        if (!std::getline(row, r.variant, ',') || !std::getline(row, r.op, ',') || !std::getline(row, n, ',') ||
            !std::getline(row, w, ',') || !std::getline(row, ns) || ns.find(',') != std::string::npos)
            throw std::runtime_error("malformed CSV row: " + line);
        try {
            r.n = std::stoull(n);
            r.block_words = std::stoull(w);
            r.ns_per_op = std::stod(ns);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed CSV row: " + line);
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace cft::bench
