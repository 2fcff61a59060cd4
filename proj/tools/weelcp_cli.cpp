#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weelcp/bundle.hpp"
#include "weelcp/st_nav.hpp"

using json = nlohmann::json;
using namespace weelcp;

namespace {

json space_to_json(const SpaceReport& r) {
    json components = json::object();
    for (const auto& c : r.components) components[c.name] = c.bits;
    return {{"components", components},
            {"total_bits", r.total_bits()},
            {"bits_per_symbol", r.bits_per_symbol()},
            {"n", r.n}};
}

void busy_wait_ns(std::uint64_t ns) {
    if (ns == 0) return;
    auto end = std::chrono::steady_clock::now() + std::chrono::nanoseconds(ns);
    while (std::chrono::steady_clock::now() < end) {
    }
}

int cmd_build(const std::string& input, const std::string& output, const std::string& repr_str,
              double delta, std::uint64_t kappa, std::uint64_t lambda) {
    auto t0 = std::chrono::steady_clock::now();
    Text text = load_text_file(input);
    Repr repr = repr_from_name(repr_str);

    IndexBundle bundle;
    if (repr == Repr::wee) {
        WeeParams p = WeeParams::defaults_for(text.n(), delta);
        if (kappa != 0) p.kappa = kappa;
        if (lambda != 0) {
            p.lambda = lambda;
            // the span threshold is derived from lambda; keep them coherent
            double lg = std::log2(static_cast<double>(std::max<std::uint64_t>(text.n(), 2)));
            p.s = std::max<std::uint64_t>(
                static_cast<std::uint64_t>(std::ceil(static_cast<double>(lambda) * std::pow(lg, delta))), 1);
        }
        p = p.normalized();
        bundle = build_bundle(std::move(text), repr, &p);
    } else {
        bundle = build_bundle(std::move(text), repr);
    }
    bundle.save(output);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    json out = {{"event", "build"},
                {"n", bundle.n()},
                {"sigma", bundle.text.sigma},
                {"repr", repr_name(repr)},
                {"build_ms", ms},
                {"space", space_to_json(bundle.space_report())}};
    if (repr == Repr::wee) {
        const auto& p = bundle.wee->params();
        out["params"] = {{"kappa", p.kappa}, {"lambda", p.lambda}, {"s", p.s}, {"delta", p.delta}};
    }
    std::cout << out.dump() << "\n";
    std::cerr << "built " << repr_name(repr) << " index: n=" << bundle.n() << " sigma="
              << bundle.text.sigma << " (" << ms << " ms) -> " << output << "\n";
    return 0;
}

int cmd_lcp(const std::string& input, std::int64_t pos, const std::string& range) {
    IndexBundle bundle = IndexBundle::load(input);
    std::uint64_t lo, hi;
    if (!range.empty()) {
        std::size_t sep = range.find("..");
        std::size_t skip = 2;
        if (sep == std::string::npos) {
            sep = range.find_first_of(":-");
            skip = 1;
        }
        if (sep == std::string::npos) throw std::invalid_argument("--range expects A:B");
        lo = std::stoull(range.substr(0, sep));
        hi = std::stoull(range.substr(sep + skip));
    } else {
        if (pos < 1) throw std::invalid_argument("--pos or --range is required");
        lo = hi = static_cast<std::uint64_t>(pos);
    }
    if (lo < 1 || hi < lo || hi > bundle.n())
        throw std::out_of_range("index out of range 1.." + std::to_string(bundle.n()));
    for (std::uint64_t i = lo; i <= hi; ++i) {
        if (i > lo) std::cout << ' ';
        std::cout << bundle.lcp(i);
    }
    std::cout << "\n";
    return 0;
}

int cmd_verify(const std::string& input) {
    IndexBundle bundle = IndexBundle::load(input);
    const std::uint64_t n = bundle.n();
    LcpArray ref = build_lcp_kasai(bundle.text, bundle.sa);

    // Prop. 1 in text order over the recomputed array
    std::uint64_t prev = 0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        std::uint64_t cur = ref.at(bundle.sa.rank_of(j));
        if (cur + 1 < prev) {
            json out = {{"event", "verify"}, {"status", "prop1_violation"}, {"text_pos", j}};
            std::cout << out.dump() << "\n";
            std::cerr << "verify: LCP drops by more than 1 at text position " << j << "\n";
            return 1;
        }
        prev = cur;
    }

    std::uint64_t max_comparisons = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::uint64_t got;
        try {
            LcpResult r = bundle.lcp_result(i);
            got = r.length;
            max_comparisons = std::max(max_comparisons, r.char_comparisons);
            if (bundle.repr == Repr::wee && r.char_comparisons > bundle.wee->params().s)
                throw std::runtime_error("comparison bound exceeded");
        } catch (const std::exception& e) {
            json out = {{"event", "verify"}, {"status", "error"}, {"i", i}, {"what", e.what()}};
            std::cout << out.dump() << "\n";
            std::cerr << "verify: access failed at i=" << i << ": " << e.what() << "\n";
            return 1;
        }
        if (got != ref.at(i)) {
            json out = {{"event", "verify"},
                        {"status", "mismatch"},
                        {"i", i},
                        {"expected", ref.at(i)},
                        {"got", got}};
            std::cout << out.dump() << "\n";
            std::cerr << "verify: mismatch at i=" << i << ": expected " << ref.at(i) << ", got "
                      << got << "\n";
            return 1;
        }
    }
    json out = {{"event", "verify"},
                {"status", "ok"},
                {"n", n},
                {"repr", repr_name(bundle.repr)},
                {"max_comparisons", max_comparisons}};
    std::cout << out.dump() << "\n";
    std::cerr << "verify: OK (" << n << " positions)\n";
    return 0;
}

int cmd_bench(const std::string& input, std::uint64_t queries, std::uint64_t seed,
              std::uint64_t sa_delay_ns, unsigned threads) {
    IndexBundle bundle = IndexBundle::load(input);
    const std::uint64_t n = bundle.n();
    if (queries == 0) {
        json out = {{"event", "bench"}, {"queries", 0}, {"repr", repr_name(bundle.repr)}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    threads = std::max(1u, threads);

    std::vector<std::vector<double>> lat(threads);
    std::vector<std::uint64_t> comp_sum(threads, 0);
    auto worker = [&](unsigned tid) {
        std::mt19937_64 rng(seed + tid);
        std::uniform_int_distribution<std::uint64_t> dist(1, n);
        std::uint64_t share = queries / threads + (tid < queries % threads ? 1 : 0);
        lat[tid].reserve(share);
        for (std::uint64_t q = 0; q < share; ++q) {
            std::uint64_t i = dist(rng);
            auto t0 = std::chrono::steady_clock::now();
            LcpResult r = bundle.lcp_result(i);
            if (sa_delay_ns > 0) {
                std::uint64_t sa_accesses = 0;
                if (bundle.repr == Repr::sadakane) sa_accesses = 1;
                if (bundle.repr == Repr::wee) sa_accesses = r.exact ? 1 : 2;
                busy_wait_ns(sa_delay_ns * sa_accesses);
            }
            auto t1 = std::chrono::steady_clock::now();
            lat[tid].push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
            comp_sum[tid] += r.char_comparisons;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::vector<double> all;
    std::uint64_t comparisons = 0;
    for (unsigned t = 0; t < threads; ++t) {
        all.insert(all.end(), lat[t].begin(), lat[t].end());
        comparisons += comp_sum[t];
    }
    std::sort(all.begin(), all.end());
    auto pct = [&](double p) { return all[std::min(all.size() - 1, static_cast<std::size_t>(p * static_cast<double>(all.size())))]; };

    // sampled cross-check against a freshly recomputed plain H
    LcpArray ref = build_lcp_kasai(bundle.text, bundle.sa);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::uint64_t> dist(1, n);
    std::uint64_t sample = std::min<std::uint64_t>(queries, 1000);
    std::uint64_t mismatches = 0;
    for (std::uint64_t q = 0; q < sample; ++q) {
        std::uint64_t i = dist(rng);
        if (bundle.lcp(i) != ref.at(i)) ++mismatches;
    }

    json out = {{"event", "bench"},
                {"repr", repr_name(bundle.repr)},
                {"queries", queries},
                {"seed", seed},
                {"threads", threads},
                {"sa_delay_ns", sa_delay_ns},
                {"median_ns", pct(0.5)},
                {"p99_ns", pct(0.99)},
                {"mean_comparisons", static_cast<double>(comparisons) / static_cast<double>(queries)},
                {"crosscheck_sample", sample},
                {"crosscheck_mismatches", mismatches}};
    std::cout << out.dump() << "\n";
    std::cerr << "bench: " << queries << " queries, median " << pct(0.5) << " ns, p99 "
              << pct(0.99) << " ns\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_space(const std::string& input) {
    IndexBundle bundle = IndexBundle::load(input);
    json out = {{"event", "space"},
                {"repr", repr_name(bundle.repr)},
                {"space", space_to_json(bundle.space_report())}};
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"succinct LCP index toolkit"};
    app.require_subcommand(1);

    std::string input, output, repr = "sadakane", range;
    double delta = 0.5;
    std::uint64_t kappa = 0, lambda = 0, queries = 100000, seed = 0, sa_delay_ns = 0;
    std::int64_t pos = -1;
    unsigned threads = 1;

    auto* build = app.add_subcommand("build", "build an index bundle from a text file");
    build->add_option("--input", input, "input text file (no 0x00 bytes)")->required();
    build->add_option("--output", output, "output bundle path")->required();
    build->add_option("--repr", repr, "plain | sadakane | wee")->check(CLI::IsMember({"plain", "sadakane", "wee"}));
    build->add_option("--delta", delta, "exponent for the wee span threshold");
    build->add_option("--kappa", kappa, "override: 1-bits per block");
    build->add_option("--lambda", lambda, "override: 1-bits per miniblock");

    auto* lcp = app.add_subcommand("lcp", "print LCP values from a bundle");
    lcp->add_option("--input", input, "bundle path")->required();
    lcp->add_option("--pos", pos, "single index i (1-based)");
    lcp->add_option("--range", range, "index range A:B (inclusive)");

    auto* verify = app.add_subcommand("verify", "recompute H and check the bundle");
    verify->add_option("--input", input, "bundle path")->required();

    auto* bench = app.add_subcommand("bench", "random-query latency benchmark");
    bench->add_option("--input", input, "bundle path")->required();
    bench->add_option("--queries", queries, "number of queries");
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_option("--sa-delay-ns", sa_delay_ns, "artificial delay per suffix-array access");
    bench->add_option("--threads", threads, "reader threads");

    auto* space = app.add_subcommand("space", "per-component space report");
    space->add_option("--input", input, "bundle path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(input, output, repr, delta, kappa, lambda);
        if (lcp->parsed()) return cmd_lcp(input, pos, range);
        if (verify->parsed()) return cmd_verify(input);
        if (bench->parsed()) return cmd_bench(input, queries, seed, sa_delay_ns, threads);
        if (space->parsed()) return cmd_space(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
