#include <doctest.h>

#include <random>
#include <sstream>

#include "weelcp/bitvec.hpp"

using namespace weelcp;

namespace {
const char* kExampleS = "00001111000110011101";
}

TEST_CASE("rank/select on the worked encoding example") {
    BitVector v = BitVector::from_string(kExampleS);
    RankSelectSupport sup(v);

    CHECK(sup.rank1(v, 8) == 4);
    CHECK(sup.rank1(v, 20) == 10);
    CHECK(sup.rank0(v, 8) == 4);
    CHECK(sup.rank0(v, 20) == 10);
    CHECK(sup.select1(v, 1) == 5);
    CHECK(sup.select1(v, 4) == 8);
    CHECK(sup.select0(v, 5) == 9);
    CHECK(sup.select0(v, 10) == 19);
    CHECK(sup.rank1(v, 0) == 0);
    CHECK(sup.rank0(v, 0) == 0);
}

TEST_CASE("degenerate vectors") {
    BitVector one = BitVector::from_string("1");
    RankSelectSupport sup1(one);
    CHECK(sup1.rank1(one, 1) == 1);
    CHECK(sup1.select1(one, 1) == 1);

    BitVector zeros(64);
    RankSelectSupport sup0(zeros);
    CHECK(sup0.rank1(zeros, 64) == 0);
    CHECK(sup0.select0(zeros, 64) == 64);

    BitVector zo = BitVector::from_string("01");
    RankSelectSupport supzo(zo);
    CHECK(supzo.select0(zo, 1) == 1);

    BitVector empty;
    RankSelectSupport supe(empty);
    CHECK(supe.rank1(empty, 0) == 0);
    CHECK_THROWS_AS(supe.select1(empty, 1), std::out_of_range);
}

TEST_CASE("range errors") {
    BitVector v = BitVector::from_string("0110");
    RankSelectSupport sup(v);
    CHECK_THROWS_AS(sup.rank1(v, 5), std::out_of_range);
    CHECK_THROWS_AS(sup.select1(v, 3), std::out_of_range);
    CHECK_THROWS_AS(sup.select1(v, 0), std::out_of_range);
    CHECK_THROWS_AS(sup.select0(v, 3), std::out_of_range);
    CHECK_THROWS_AS(v.get(0), std::out_of_range);
    CHECK_THROWS_AS(v.get(5), std::out_of_range);
}

TEST_CASE("exhaustive agreement with a scan oracle on random vectors") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 100; ++round) {
        std::uniform_int_distribution<std::uint64_t> len_dist(0, 1024);
        std::uint64_t len = len_dist(rng);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        double p = density(rng);
        BitVector v(len);
        std::vector<int> bits(len);
        std::bernoulli_distribution bit(p);
        for (std::uint64_t i = 0; i < len; ++i) {
            bits[i] = bit(rng) ? 1 : 0;
            if (bits[i]) v.set(i + 1, true);
        }
        // small spacings so every code path is hit on short vectors
        RankSelectParams params{256, 64, 16};
        RankSelectSupport sup(v, params);

        std::uint64_t ones = 0, zeros = 0, prev_sel = 0;
        for (std::uint64_t i = 0; i <= len; ++i) {
            if (i > 0 && bits[i - 1] == 1) ++ones;
            if (i > 0 && bits[i - 1] == 0) ++zeros;
            REQUIRE(sup.rank1(v, i) == ones);
            REQUIRE(sup.rank0(v, i) == zeros);
            REQUIRE(sup.rank0(v, i) + sup.rank1(v, i) == i);
        }
        for (std::uint64_t q = 1, c = 0, pos = 0; pos < len; ++pos) {
            if (bits[pos] == 1) {
                ++c;
                std::uint64_t got = sup.select1(v, c);
                REQUIRE(got == pos + 1);
                REQUIRE(sup.rank1(v, got) == c);
                REQUIRE(v.get(got));
                REQUIRE(got > prev_sel);  // strictly increasing in q
                prev_sel = got;
                q = c;
            }
        }
        for (std::uint64_t c = 0, pos = 0; pos < len; ++pos) {
            if (bits[pos] == 0) {
                ++c;
                std::uint64_t got = sup.select0(v, c);
                REQUIRE(got == pos + 1);
                REQUIRE(sup.rank0(v, got) == c);
                REQUIRE(!v.get(got));
            }
        }
    }
}

TEST_CASE("default-parameter support agrees with oracle across sizes") {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution bit(0.37);
    BitVector v(100000);
    std::vector<int> bits(100000);
    for (std::uint64_t i = 0; i < bits.size(); ++i) {
        bits[i] = bit(rng) ? 1 : 0;
        if (bits[i]) v.set(i + 1, true);
    }
    RankSelectSupport sup(v);
    auto scan_rank1 = [&](std::uint64_t i) {
        std::uint64_t c = 0;
        for (std::uint64_t p = 0; p < i; ++p) c += static_cast<std::uint64_t>(bits[p]);
        return c;
    };
    std::uniform_int_distribution<std::uint64_t> pick(0, bits.size());
    for (int k = 0; k < 2000; ++k) {
        std::uint64_t i = pick(rng);
        REQUIRE(sup.rank1(v, i) == scan_rank1(i));
    }
    // spot-check selects at sample boundaries and around them
    std::uint64_t ones = sup.ones();
    for (std::uint64_t q : {std::uint64_t(1), std::uint64_t(8191), std::uint64_t(8192),
                            std::uint64_t(8193), ones}) {
        if (q < 1 || q > ones) continue;
        std::uint64_t got = sup.select1(v, q);
        REQUIRE(sup.rank1(v, got) == q);
        REQUIRE(v.get(got));
    }
}

TEST_CASE("support overhead per bit is non-increasing with length") {
    double prev = 1e9;
    for (int e = 12; e <= 20; e += 2) {
        std::uint64_t len = 1ull << e;
        BitVector v(len);
        for (std::uint64_t i = 1; i <= len; i += 2) v.set(i, true);  // deterministic content
        RankSelectSupport sup(v);
        double ratio = static_cast<double>(sup.overhead_bits()) / static_cast<double>(len);
        CHECK(ratio <= prev + 1e-12);
        prev = ratio;
    }
}

TEST_CASE("serialization round-trip; support rebuilt on load") {
    BitVector v = BitVector::from_string(kExampleS);
    std::stringstream ss;
    v.serialize(ss);
    BitVector w = BitVector::deserialize(ss);
    CHECK(w == v);
    RankSelectSupport sup(w);
    CHECK(sup.select1(w, 10) == 20);
}
