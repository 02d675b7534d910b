// cft: command-line front end for the transposition counter, the
// preferential-attachment generator and the benchmark harness.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cft/apps/permutation.hpp"
#include "cft/apps/pref_attach.hpp"
#include "cft/apps/transpositions.hpp"
#include "cft/bench/harness.hpp"
#include "cft/fenwick/variant.hpp"

namespace {

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_transpositions(std::uint64_t n, std::uint64_t seed, const std::string& input, const std::string& backend,
                       std::size_t block_words) {
    const cft::TreeVariant variant = cft::parse_variant(backend);
    cft::apps::Permutation pi;
    if (input.empty()) {
        pi = cft::apps::random_permutation(n, seed);
    } else {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open " + input);
        pi = cft::apps::read_permutation(in);
    }
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = cft::apps::count_transpositions(pi, variant, block_words);
    const auto stop = std::chrono::steady_clock::now();
    const double ns = static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    std::cout << "transpositions " << count << '\n';
    std::cout << "ns_per_element " << std::fixed << std::setprecision(3)
              << (pi.empty() ? 0.0 : ns / static_cast<double>(pi.size())) << '\n';
    return 0;
}

int run_pa(const cft::apps::PAConfig& cfg, const std::string& output, const std::string& backend) {
    const cft::apps::PAGraph g = cft::apps::generate_pa(cfg, cft::parse_variant(backend));
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open " + output + " for writing");
    cft::apps::write_edges(out, g.edges);
    std::cerr << "edges " << g.edges.size() << " degree_sum " << g.degree_sum << '\n';
    return 0;
}

/// Informational ratios; never used as a pass/fail signal.
void report_deltas(const cft::bench::BenchConfig& cfg, const std::vector<cft::bench::BenchRecord>& records) {
    std::map<std::pair<std::string, std::string>, double> at_max;
    const std::size_t largest = cfg.sizes.back();
    for (const auto& r : records)
        if (r.n == largest) at_max[{r.variant, r.op}] = r.ns_per_op;
    std::cerr << "# deltas at n = " << largest << " (informational)\n";
    for (const char* c : {"fixed", "byte", "bit"}) {
        for (const auto& op : {"find", "select"}) {
            const auto level = at_max.find({std::string(c) + "[l]", op});
            const auto classical = at_max.find({std::string(c) + "[F]", op});
            if (level == at_max.end() || classical == at_max.end()) continue;
            std::cerr << "#   " << op << ' ' << c << "[l] / " << c << "[F] = " << std::setprecision(3)
                      << level->second / classical->second << '\n';
        }
    }
    if (cfg.target != cft::bench::Target::Fenwick) return;
    cft::bench::BenchConfig no_holes = cfg;
    no_holes.tree.hole_log = cft::kNoHoles;
    no_holes.ops = {cft::bench::Op::Find};
    no_holes.sizes = {largest};
    no_holes.variants.clear();
    for (auto v : cfg.variants)
        if (v.layout == cft::Layout::Classical) no_holes.variants.push_back(v);
    if (no_holes.variants.empty()) return;
    for (const auto& r : cft::bench::run(no_holes)) {
        const auto with = at_max.find({r.variant, "find"});
        if (with == at_max.end()) continue;
        std::cerr << "#   find " << r.variant << " holes / no holes = " << std::setprecision(3)
                  << with->second / r.ns_per_op << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compact Fenwick trees and dynamic bit vectors"};
    app.require_subcommand(1);

    std::uint64_t n = 1'000'000, seed = 0;
    std::string input, backend = "byte[l]", output;
    std::size_t block_words = 16;
    auto* trans = app.add_subcommand("transpositions", "Count the transpositions generating a permutation");
    trans->add_option("--n", n, "Size of the generated permutation");
    trans->add_option("--seed", seed, "PRNG seed for the generated permutation");
    trans->add_option("--input", input, "Read the permutation from a file (one integer per line)");
    trans->add_option("--backend", backend, "Tree variant, e.g. byte[l] or fixed[F]");
    trans->add_option("--block-words", block_words, "Words per bit-vector block")->check(CLI::PositiveNumber);

    cft::apps::PAConfig pa;
    std::string pa_backend = "fixed[l]";
    auto* graph = app.add_subcommand("pa-graph", "Generate a preferential-attachment graph");
    graph->add_option("--n", pa.vertices, "Final number of vertices")->required();
    graph->add_option("--d", pa.degree, "Edges per new vertex")->required();
    graph->add_option("--d0", pa.seed_vertices, "Initial vertices, each with a self-loop")->required();
    graph->add_option("--seed", pa.seed, "PRNG seed");
    graph->add_option("--output", output, "Edge list destination")->required();
    graph->add_option("--backend", pa_backend, "Tree variant");

    cft::bench::BenchConfig bc;
    std::string target = "fenwick", variants = "bit[l],byte[l],fixed[l],bit[F],byte[F],fixed[F]", ops, sizes = "ladder",
                csv;
    bool no_sink = false, deltas = false, no_holes = false;
    auto* bench = app.add_subcommand("bench", "Measure ns/op of tree and bit-vector primitives");
    bench->add_option("--target", target, "fenwick or bitvec");
    bench->add_option("--variant", variants, "Comma-separated variant tags");
    bench->add_option("--op", ops, "Comma-separated ops (default: prefix,find,add or rank,select,update)");
    bench->add_option("--sizes", sizes, "ladder, ladder:LO:HI, large, or a comma-separated list");
    bench->add_option("--queries", bc.queries, "Queries per measurement")->check(CLI::PositiveNumber);
    bench->add_option("--bound", bc.bound, "Bound on Fenwick values")->check(CLI::PositiveNumber);
    bench->add_option("--block-words", bc.block_words, "Words per bit-vector block")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bc.seed, "PRNG seed");
    bench->add_option("--csv", csv, "Write CSV here instead of stdout");
    bench->add_flag("--no-sink", no_sink, "Do not store results into the volatile sink");
    bench->add_flag("--no-holes", no_holes, "Disable hole insertion in classical layouts");
    bench->add_flag("--report-deltas", deltas, "Print informational layout/hole comparisons to stderr");

    std::string space_target = "bitvec", space_variants = "fixed[F],byte[F],bit[F],fixed[l],byte[l],bit[l]";
    std::size_t space_n = 100'000'000, space_block = 16;
    std::uint64_t space_bound = 64;
    auto* space = app.add_subcommand("space", "Report measured storage per element or per payload bit");
    space->add_option("--target", space_target, "fenwick or bitvec");
    space->add_option("--variant", space_variants, "Comma-separated variant tags");
    space->add_option("--n", space_n, "Elements (fenwick) or payload bits (bitvec)")->check(CLI::PositiveNumber);
    space->add_option("--bound", space_bound, "Bound on Fenwick values")->check(CLI::PositiveNumber);
    space->add_option("--block-words", space_block, "Words per bit-vector block")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*trans) return run_transpositions(n, seed, input, backend, block_words);
        if (*graph) return run_pa(pa, output, pa_backend);
        if (*bench) {
            bc.target = cft::bench::parse_target(target);
            bc.variants.clear();
            for (const auto& v : split(variants)) bc.variants.push_back(cft::parse_variant(v));
            for (const auto& o : split(ops)) bc.ops.push_back(cft::bench::parse_op(o));
            if (bc.ops.empty()) bc.ops = cft::bench::default_ops(bc.target);
            bc.sizes = cft::bench::parse_sizes(sizes);
            bc.sink = !no_sink;
            if (no_holes) bc.tree.hole_log = cft::kNoHoles;
            const auto records = cft::bench::run(bc);
            if (csv.empty()) {
                cft::bench::write_csv(std::cout, records);
            } else {
                cft::bench::write_csv(csv, records);
            }
            if (deltas) report_deltas(bc, records);
            return 0;
        }
        if (*space) {
            const auto t = cft::bench::parse_target(space_target);
            std::cout << "variant,n,block_words,storage_bits,bits_per_element\n";
            for (const auto& tag : split(space_variants)) {
                const auto v = cft::parse_variant(tag);
                const auto r = cft::bench::space_report(t, v, space_n, space_bound, space_block);
                std::cout << cft::to_string(v) << ',' << space_n << ','
                          << (t == cft::bench::Target::BitVector ? space_block : 0) << ',' << r.storage_bits << ','
                          << std::fixed << std::setprecision(4) << r.bits_per_element << '\n';
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
