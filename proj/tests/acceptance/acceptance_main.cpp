// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: cft_acceptance [--csv PATH] [--only NAME]

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cft/apps/permutation.hpp"
#include "cft/apps/pref_attach.hpp"
#include "cft/apps/transpositions.hpp"
#include "cft/bench/harness.hpp"
#include "cft/dyn_bit_vector.hpp"
#include "cft/fenwick.hpp"
#include "support/oracle_runs.hpp"

namespace {

using cft::testing::describe;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> info;

    void fail(std::string why) {
        if (pass) detail = std::move(why);
        pass = false;
    }
};

struct Options {
    std::string csv_path;
    std::string only;
};

// Fenwick oracle equivalence

Outcome fenwick_oracle() {
    Outcome out;
    const std::uint64_t bounds[] = {1, 63, 64, 1024};
    std::size_t sequences = 0;
    for (auto v : cft::kAllVariants) {
        cft::dispatch_variant(v, [&]<class Tree>(std::type_identity<Tree>) {
            for (std::uint64_t s = 0; s < 1000; ++s) {
                const std::uint64_t bound = bounds[s % 4];
                const std::string err = cft::testing::fenwick_sequence<Tree>(0xF00D + s, 2048, bound, 200);
                ++sequences;
                if (!err.empty()) {
                    out.fail(describe(cft::to_string(v), " B=", bound, " seed ", s, ": ", err));
                    return;
                }
            }
        });
    }
    if (out.pass) out.detail = describe(sequences, " sequences, n <= 2048, B in {1, 63, 64, 1024}");
    return out;
}

// Bit-vector oracle equivalence

Outcome bitvector_oracle() {
    Outcome out;
    std::size_t sequences = 0;
    for (auto v : cft::kAllVariants) {
        cft::dispatch_variant(v, [&]<class Tree>(std::type_identity<Tree>) {
            for (std::size_t w : {1U, 16U}) {
                std::mt19937_64 rng(w * 1000 + static_cast<unsigned>(v.compression) * 10 +
                                    static_cast<unsigned>(v.layout));
                for (int s = 0; s < 26 && out.pass; ++s) {
                    // Two full-size runs, the rest spread over small and medium lengths.
                    const std::size_t len = s < 2 ? 1'000'000 : rng() % (s % 3 == 0 ? 200'000 : 5'000);
                    const std::size_t ops = s < 2 ? 400 : 2'000;
                    const std::string err = cft::testing::bitvector_sequence<Tree>(rng(), len, w, ops);
                    ++sequences;
                    if (!err.empty()) out.fail(describe(cft::to_string(v), " W=", w, " len ", len, ": ", err));
                }
            }
        });
    }
    if (out.pass) out.detail = describe(sequences, " sequences up to 10^6 bits, W in {1, 16}");
    return out;
}

// Space accounting of the bit layout

Outcome bit_accounting() {
    Outcome out;
    for (unsigned s : {1U, 7U, 11U, 55U}) {
        std::size_t sum = 0;
        for (std::size_t j = 1; j <= (1U << 16); ++j) {
            sum += s + cft::rho(j);
            if (sum != j * (s + 1) - cft::nu(j)) {
                out.fail(describe("width sum S=", s, " j=", j));
                return out;
            }
        }
    }
    for (std::size_t n : {1'000U, 100'000U, 10'000'000U}) {
        cft::BitFenwick tree(64);  // S = 7
        for (std::size_t i = 0; i < n; ++i) tree.push(i % 65);
        const std::size_t expected = n * 8 - cft::nu(n) + 1 + 64 * (n >> 14);
        if (tree.used_bits() != expected)
            out.fail(describe("n=", n, ": measured ", tree.used_bits(), " bits, expected ", expected));
        out.info.push_back(describe("n=", n, " S=7: ", tree.used_bits(), " bits"));
    }
    if (out.pass) out.detail = "sums for j <= 2^16, S in {1, 7, 11, 55}; storage for n in {10^3, 10^5, 10^7}";
    return out;
}

// Space ratios of the dynamic bit vector at 10^8 payload bits

Outcome space_ratios() {
    Outcome out;
    struct Cell {
        cft::Compression c;
        std::size_t w;
        double expected;
    };
    const Cell cells[] = {
        {cft::Compression::Fixed, 1, 2.00}, {cft::Compression::Byte, 1, 1.16}, {cft::Compression::Bit, 1, 1.12},
        {cft::Compression::Fixed, 16, 1.06}, {cft::Compression::Byte, 16, 1.02}, {cft::Compression::Bit, 16, 1.01},
    };
    const std::size_t n = 100'000'000;
    for (const auto& cell : cells) {
        for (auto layout : {cft::Layout::Classical, cft::Layout::Level}) {
            const cft::TreeVariant v{layout, cell.c};
            const auto r = cft::bench::space_report(cft::bench::Target::BitVector, v, n, 0, cell.w);
            const double delta = std::abs(r.bits_per_element - cell.expected);
            std::ostringstream line;
            line << cft::to_string(v) << " W=" << cell.w << ": " << std::fixed << std::setprecision(4)
                 << r.bits_per_element << " (target " << std::setprecision(2) << cell.expected << ")";
            out.info.push_back(line.str());
            if (!(delta <= 0.01 + 1e-12)) out.fail(line.str());
        }
    }
    if (out.pass) out.detail = "6 cells x 2 layouts within 0.01";
    return out;
}

// Structural identities

bool update_paths_reverse(std::uint64_t n) {
    std::uint64_t up[64], down[64];
    for (std::uint64_t p = 1; p <= n; ++p) {
        unsigned nu_ = 0;
        for (std::uint64_t j = p; j <= n; j += j & (~j + 1)) up[nu_++] = j;
        const std::uint64_t low = p & (p - 1);
        std::uint64_t j = (n ^ low) == 0 ? p : n & (cft::kAllOnes << cft::lambda(n ^ low));
        unsigned nd = 0;
        down[nd++] = j;
        const std::uint64_t neg_p = ~p + 1;
        std::uint64_t neg_j = ~j + 1;
        while (j != p && nd < 64) {
            neg_j ^= std::uint64_t{1} << cft::lambda(neg_j ^ neg_p);
            j = ~neg_j + 1;
            down[nd++] = j;
        }
        if (nd != nu_) return false;
        for (unsigned i = 0; i < nd; ++i)
            if (down[i] != up[nd - 1 - i]) return false;
    }
    return true;
}

bool interrogation_paths_reverse(std::uint64_t p) {
    std::uint64_t up[64];
    unsigned nu_ = 0;
    for (std::uint64_t j = p; j != 0; j &= j - 1) up[nu_++] = j;
    unsigned i = nu_;
    for (std::uint64_t j = 0; j != p;) {
        j |= std::uint64_t{1} << cft::lambda(j ^ p);
        if (i == 0 || up[--i] != j) return false;
    }
    return i == 0;
}

Outcome structural() {
    Outcome out;
    const std::uint64_t big = 1U << 20;
    for (std::uint64_t j = 1; j <= big && out.pass; ++j) {
        const std::uint64_t neg = ~j + 1;
        if ((neg & (neg - 1)) != ~(j + (j & neg)) + 1) out.fail(describe("duality at j=", j));
        const auto pos = cft::level::to_level(j);
        if (cft::level::from_level(pos) != j || pos.level != cft::rho(j))
            out.fail(describe("level bijection at j=", j));
        if (cft::nu(j) + cft::rho(j) > cft::lambda(j) + 1) out.fail(describe("nu + rho bound at j=", j));
    }
    const std::uint64_t small = 1U << 14;
    for (std::uint64_t n = 1; n <= small && out.pass; ++n) {
        for (std::uint64_t j = 1; j <= n; ++j) {
            const auto pos = cft::level::to_level(j);
            const std::uint64_t ip = j & (j - 1);
            const auto lip = cft::level::parent_interrogation(pos);
            if (n == j && (ip == 0 ? lip.has_value() : lip != cft::level::to_level(ip))) {
                out.fail(describe("interrogation parent at j=", j));
                break;
            }
            const std::uint64_t up = j + (j & (~j + 1));
            const auto lup = cft::level::parent_update(pos, n);
            if (up > n ? lup.has_value() : lup != cft::level::to_level(up)) {
                out.fail(describe("update parent at j=", j, " n=", n));
                break;
            }
        }
        if (!update_paths_reverse(n)) out.fail(describe("top-down update path for n=", n));
        if (!interrogation_paths_reverse(n)) out.fail(describe("top-down interrogation path for p=", n));
    }
    // Word containment of aligned bit-layout nodes, and reads through every path.
    for (unsigned s = 1; s <= 55 && out.pass; ++s) {
        for (std::size_t j = 1; j <= (1U << 16); ++j) {
            if (j * (s + 1) % 64 != 0 || s + cft::lambda(j) > 64) continue;  // unreachable nodes
            for (unsigned hole_log : {cft::kDefaultHoleLog, cft::kNoHoles}) {
                const auto f = cft::classical::bit_field(j, s, hole_log);
                if (f.offset / 64 != (f.offset + f.width - 1) / 64) out.fail(describe("S=", s, " j=", j, " crosses"));
            }
        }
        const std::uint64_t bound = (std::uint64_t{1} << s) - 1;
        std::mt19937_64 rng(s);
        const std::size_t n = s + 16 <= 64 ? (1U << 16) : (std::size_t{1} << (64 - s + 1)) - 1;
        std::vector<std::uint64_t> values(n);
        for (auto& v : values) v = rng() & bound;
        cft::BitFenwick bit(bound, values);
        cft::FixedFenwick fixed(bound, values);
        for (std::size_t j = 1; j <= n; ++j) {
            if (bit.node(j, cft::rho(j)) != fixed.node(j, cft::rho(j))) {
                out.fail(describe("bit layout read S=", s, " j=", j));
                break;
            }
        }
    }
    const auto witness = cft::classical::bit_field(60, 56, cft::kNoHoles);
    const std::size_t last = witness.offset + witness.width - 1;
    out.info.push_back(describe("S=56 j=60: ", witness.width, "-bit field at bits ", witness.offset, "..", last));
    if (witness.width != 58 || witness.offset / 64 == last / 64 || witness.offset % 8 + witness.width <= 64)
        out.fail("S=56, j=60 field does not span two words");
    bool rejected = false;
    try {
        cft::BitFenwick tree((std::uint64_t{1} << 56) - 1);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    if (!rejected) out.fail("bit layout accepted S=56");
    if (out.pass)
        out.detail = "duality, bijection, nu+rho <= lambda+1 on [1, 2^20]; parents and top-down paths for "
                     "p <= n <= 2^14; containment for n = 2^16, S in 1..55; S=56 witness";
    return out;
}

// Applications

Outcome applications() {
    Outcome out;
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100 && out.pass; ++t) {
        const auto pi = cft::apps::random_permutation(1 + rng() % 4096, rng());
        const auto expected = cft::testing::inversions_oracle(pi);
        const auto v = cft::kAllVariants[static_cast<std::size_t>(t) % cft::kAllVariants.size()];
        const auto got = cft::apps::count_transpositions(pi, v, t % 2 == 0 ? 16 : 1);
        if (got != expected)
            out.fail(describe("permutation ", t, " (n=", pi.size(), ", ", cft::to_string(v), "): ", got, " != ", expected));
    }
    for (std::size_t n : {2U, 3U, 10U, 1000U}) {
        cft::apps::Permutation rev(n);
        for (std::size_t i = 0; i < n; ++i) rev[i] = n - 1 - i;
        for (auto v : cft::kAllVariants)
            if (cft::apps::count_transpositions(rev, v) != n * (n - 1) / 2)
                out.fail(describe("reversal n=", n, " on ", cft::to_string(v)));
    }
    const cft::apps::PAConfig configs[] = {{10, 2, 3, 5}, {5, 1, 5, 0}, {20'000, 3, 4, 42}, {5'000, 8, 10, 7}};
    for (const auto& cfg : configs) {
        std::string reference;
        for (auto v : cft::kAllVariants) {
            const auto g = cft::apps::generate_pa(cfg, v);
            const std::uint64_t m = cfg.seed_vertices + (cfg.vertices - cfg.seed_vertices) * cfg.degree;
            if (g.edges.size() != m) out.fail(describe("PA n=", cfg.vertices, ": ", g.edges.size(), " edges"));
            if (g.degree_sum != 2 * m) out.fail(describe("PA n=", cfg.vertices, ": degree sum ", g.degree_sum));
            std::vector<std::uint64_t> degree(cfg.vertices, 0);
            for (auto [a, b] : g.edges) {
                ++degree[a];
                ++degree[b];
            }
            if (degree != g.degrees) out.fail(describe("PA n=", cfg.vertices, ": tree degrees disagree with edges"));
            std::ostringstream text;
            cft::apps::write_edges(text, g.edges);
            if (reference.empty()) reference = text.str();
            if (text.str() != reference) out.fail(describe("PA n=", cfg.vertices, ": ", cft::to_string(v), " differs"));
        }
    }
    if (out.pass)
        out.detail = "100 permutations vs quadratic oracle; reversals; PA counts, degrees, backend-identical output";
    return out;
}

// Bench smoke run

Outcome bench_smoke(const Options& opts) {
    Outcome out;
    using namespace cft::bench;
    std::vector<BenchRecord> all;
    std::set<std::tuple<std::string, std::string, std::size_t>> expected;
    const std::vector<std::size_t> sizes{1U << 10, 1U << 14, 1U << 18, 1U << 22};
    for (Target t : {Target::Fenwick, Target::BitVector}) {
        BenchConfig cfg;
        cfg.target = t;
        cfg.sizes = sizes;
        cfg.queries = 200'000;
        cfg.ops = default_ops(t);
        for (auto n : sizes)
            for (auto v : cfg.variants)
                for (auto op : cfg.ops) expected.emplace(cft::to_string(v), to_string(op), n);
        const auto records = run(cfg);
        all.insert(all.end(), records.begin(), records.end());

        std::map<std::pair<std::string, std::string>, double> at_max;
        for (const auto& r : records)
            if (r.n == sizes.back()) at_max[{r.variant, r.op}] = r.ns_per_op;
        const std::string op = t == Target::Fenwick ? "find" : "select";
        for (const char* c : {"fixed", "byte", "bit"}) {
            std::ostringstream line;
            line << op << ' ' << c << "[l] / " << c << "[F] at n=2^22: " << std::setprecision(3)
                 << at_max[{std::string(c) + "[l]", op}] / at_max[{std::string(c) + "[F]", op}];
            out.info.push_back(line.str());
        }
        if (t == Target::Fenwick) {
            BenchConfig plain = cfg;
            plain.tree.hole_log = cft::kNoHoles;
            plain.sizes = {sizes.back()};
            plain.ops = {Op::Find};
            plain.variants = {cft::parse_variant("fixed[F]"), cft::parse_variant("byte[F]"),
                              cft::parse_variant("bit[F]")};
            for (const auto& r : run(plain)) {
                std::ostringstream line;
                line << "find " << r.variant << " holes / no holes at n=2^22: " << std::setprecision(3)
                     << at_max[{r.variant, "find"}] / r.ns_per_op;
                out.info.push_back(line.str());
            }
        }
    }
    std::ostringstream csv;
    write_csv(csv, all);
    if (!opts.csv_path.empty()) write_csv(opts.csv_path, all);
    std::istringstream in(csv.str());
    const auto parsed = read_csv(in);
    std::set<std::tuple<std::string, std::string, std::size_t>> seen;
    for (const auto& r : parsed) {
        if (!std::isfinite(r.ns_per_op) || r.ns_per_op <= 0) out.fail(describe("bad timing in ", r.variant, ' ', r.op));
        seen.emplace(r.variant, r.op, r.n);
    }
    if (parsed.size() != all.size() || seen != expected)
        out.fail(describe("CSV has ", seen.size(), " distinct cells, expected ", expected.size()));
    if (out.pass) out.detail = describe(parsed.size(), " cells, sizes 2^10..2^22, fenwick and bitvec");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--csv" && i + 1 < argc) {
            opts.csv_path = argv[++i];
        } else if (arg == "--only" && i + 1 < argc) {
            opts.only = argv[++i];
        } else {
            std::cerr << "usage: " << argv[0] << " [--csv PATH] [--only NAME]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"fenwick-oracle-equivalence", fenwick_oracle},
        {"bitvector-oracle-equivalence", bitvector_oracle},
        {"bit-layout-space-accounting", bit_accounting},
        {"bitvector-space-ratios", space_ratios},
        {"structural-identities", structural},
        {"applications", applications},
        {"bench-smoke-csv", [&] { return bench_smoke(opts); }},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        if (!opts.only.empty() && name != opts.only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome result;
        try {
            result = check();
        } catch (const std::exception& e) {
            result.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (const auto& line : result.info) std::cout << "      info: " << line << '\n';
        std::cout << (result.pass ? "PASS " : "FAIL ") << name << " - " << result.detail << " [" << std::fixed
                  << std::setprecision(1) << secs << " s]" << std::endl;
        failures += result.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
