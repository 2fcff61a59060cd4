#include <doctest.h>

#include <random>
#include <sstream>

#include "test_util.hpp"
#include "weelcp/lcp_sadakane.hpp"

using namespace weelcp;

namespace {

struct Fixture {
    Text t;
    SuffixArray sa;
    LcpArray h;
    explicit Fixture(const std::string& raw) : t(load_text(raw)), sa(build_suffix_array(t)),
                                               h(build_lcp_kasai(t, sa)) {}
};

std::string to_string(const BitVector& v) {
    std::string s;
    for (std::uint64_t i = 1; i <= v.size(); ++i) s += v.get(i) ? '1' : '0';
    return s;
}

}  // namespace

TEST_CASE("differential unary encoding of the worked example") {
    Fixture f("CACAACCAC");
    BitVector s = write_differential_unary(f.h, f.sa);
    CHECK(to_string(s) == "00001111000110011101");
    CHECK(s.size() == 2 * f.t.n());
    CHECK(s.popcount() == f.t.n());
}

TEST_CASE("encoding of degenerate texts") {
    Fixture dollar("");
    CHECK(to_string(write_differential_unary(dollar.h, dollar.sa)) == "01");

    Fixture aaa("AAA");
    BitVector s = write_differential_unary(aaa.h, aaa.sa);
    CHECK(s.size() == 8);
    CHECK(s.popcount() == 4);
}

TEST_CASE("corrupted inputs are rejected") {
    Fixture f("CACAACCAC");
    LcpArray broken = f.h;
    // force a drop of more than 1 in text order
    broken.h[f.sa.rank_of(1) - 1] = 7;
    broken.h[f.sa.rank_of(2) - 1] = 0;
    CHECK_THROWS_AS(write_differential_unary(broken, f.sa), std::runtime_error);
}

TEST_CASE("both access formulas reproduce H on the worked example") {
    Fixture f("CACAACCAC");
    SadakaneLcp d = SadakaneLcp::build(f.h, f.sa);
    CHECK(d.access_eq1(f.sa, 9) == 3);
    CHECK(d.access_eq2(f.sa, 9) == 3);
    CHECK(d.access_eq1(f.sa, 1) == 0);
    CHECK(d.access_eq2(f.sa, 1) == 0);
    CHECK(d.access_eq1(f.sa, 4) == 2);
    CHECK(d.access_eq2(f.sa, 2) == 0);
    for (std::uint64_t i = 1; i <= f.t.n(); ++i) {
        CHECK(d.access_eq1(f.sa, i) == f.h.at(i));
        CHECK(d.access_eq2(f.sa, i) == f.h.at(i));
    }
    CHECK_THROWS_AS(d.access_eq1(f.sa, 0), std::out_of_range);
    CHECK_THROWS_AS(d.access_eq2(f.sa, 11), std::out_of_range);
}

TEST_CASE("access equals plain H on random and adversarial texts") {
    std::mt19937_64 rng(99);
    std::vector<std::string> corpus = {testutil::periodic_text(500), testutil::unary_text(700),
                                       testutil::fibonacci_text(800)};
    for (unsigned sigma : {2u, 4u, 26u, 255u})
        corpus.push_back(testutil::random_text(rng, 1500, sigma));

    for (const auto& raw : corpus) {
        Fixture f(raw);
        SadakaneLcp d = SadakaneLcp::build(f.h, f.sa);
        const std::uint64_t n = f.t.n();
        REQUIRE(d.bits().size() == 2 * n);
        REQUIRE(d.bits().popcount() == n);
        for (std::uint64_t i = 1; i <= n; ++i) {
            REQUIRE(d.access_eq1(f.sa, i) == f.h.at(i));
            REQUIRE(d.access_eq2(f.sa, i) == f.h.at(i));
        }
        // the rewrite identity behind the single-select formula
        for (std::uint64_t x = 1; x <= n; ++x) {
            std::uint64_t p = d.support().select1(d.bits(), x);
            REQUIRE(d.support().rank0(d.bits(), p) == p - x);
        }
        // decoding S by scanning reproduces H in text order
        std::vector<int> bits;
        for (std::uint64_t p = 1; p <= d.bits().size(); ++p) bits.push_back(d.bits().get(p));
        std::uint64_t value = 0, seen = 0;
        std::int64_t cur = -1;
        for (int b : bits) {
            if (b == 0) {
                ++value;
            } else {
                ++seen;
                cur = static_cast<std::int64_t>(value) - static_cast<std::int64_t>(seen);
                REQUIRE(cur == static_cast<std::int64_t>(f.h.at(f.sa.rank_of(seen))));
            }
        }
        REQUIRE(seen == n);
    }
}

TEST_CASE("space report") {
    Fixture f("CACAACCAC");
    SadakaneLcp d = SadakaneLcp::build(f.h, f.sa);
    SpaceReport r = d.space_report();
    CHECK(r.components.at(0).name == "S");
    CHECK(r.components.at(0).bits == 20);

    Fixture dollar("");
    CHECK(SadakaneLcp::build(dollar.h, dollar.sa).space_report().components.at(0).bits == 2);
}

TEST_CASE("serialization round-trip") {
    Fixture f("CACAACCAC");
    SadakaneLcp d = SadakaneLcp::build(f.h, f.sa);
    std::stringstream ss;
    d.serialize(ss);
    SadakaneLcp d2 = SadakaneLcp::deserialize(ss);
    CHECK(d2.text_length() == f.t.n());
    for (std::uint64_t i = 1; i <= f.t.n(); ++i) CHECK(d2.access_eq2(f.sa, i) == f.h.at(i));
}
