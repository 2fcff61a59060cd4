#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "weelcp/st_nav.hpp"

using namespace weelcp;

namespace {

struct Fixture {
    Text t;
    SuffixArray sa;
    LcpArray h;
    explicit Fixture(const std::string& raw) : t(load_text(raw)), sa(build_suffix_array(t)),
                                               h(build_lcp_kasai(t, sa)) {}
};

std::uint64_t naive_rmq(const LcpArray& h, std::uint64_t l, std::uint64_t r) {
    std::uint64_t arg = l;
    for (std::uint64_t i = l + 1; i <= r; ++i)
        if (h.at(i) < h.at(arg)) arg = i;
    return arg;
}

std::optional<std::uint64_t> naive_psv(const LcpArray& h, std::uint64_t i) {
    for (std::uint64_t j = i; j-- > 1;)
        if (h.at(j) < h.at(i)) return j;
    return std::nullopt;
}

std::optional<std::uint64_t> naive_nsv(const LcpArray& h, std::uint64_t i) {
    for (std::uint64_t j = i + 1; j <= h.n(); ++j)
        if (h.at(j) < h.at(i)) return j;
    return std::nullopt;
}

}  // namespace

TEST_CASE("queries on the worked example") {
    Fixture f("CACAACCAC");
    PlainLcpAccessor acc(f.h);
    StNav nav(acc);

    // H = 0 0 1 2 2 0 1 2 3 1
    CHECK(nav.rmq(2, 10) == 2);
    CHECK(nav.rmq(7, 9) == 7);
    CHECK(nav.rmq(3, 5) == 3);
    for (std::uint64_t i = 2; i <= 10; ++i) CHECK(nav.rmq(i, i) == i);
    CHECK_THROWS_AS(nav.rmq(1, 3), std::out_of_range);
    CHECK_THROWS_AS(nav.rmq(5, 3), std::out_of_range);

    CHECK(nav.psv(9) == 8);
    CHECK(nav.psv(5) == 3);
    CHECK_FALSE(nav.psv(2).has_value());
    CHECK(nav.nsv(4) == 6);
    CHECK(nav.nsv(9) == 10);
    CHECK_FALSE(nav.nsv(6).has_value());
}

TEST_CASE("parent chain on the worked example") {
    Fixture f("CACAACCAC");
    PlainLcpAccessor acc(f.h);
    StNav nav(acc);

    IntervalNode leaf_pair{8, 9, 3};  // the two CAC... suffixes
    auto p1 = nav.parent_interval(leaf_pair);
    REQUIRE(p1.has_value());
    CHECK(*p1 == IntervalNode{7, 9, 2});
    auto p2 = nav.parent_interval(*p1);
    REQUIRE(p2.has_value());
    CHECK(*p2 == IntervalNode{6, 10, 1});
    auto p3 = nav.parent_interval(*p2);
    REQUIRE(p3.has_value());
    CHECK(*p3 == IntervalNode{1, 10, 0});
    CHECK_FALSE(nav.parent_interval(*p3).has_value());
}

TEST_CASE("agreement with scan oracles and across representations") {
    std::mt19937_64 rng(17);
    std::vector<std::string> corpus = {testutil::periodic_text(300), testutil::unary_text(257),
                                       testutil::fibonacci_text(400),
                                       testutil::random_text(rng, 480, 3),
                                       testutil::random_text(rng, 480, 26)};
    for (const auto& raw : corpus) {
        Fixture f(raw);
        const std::uint64_t n = f.t.n();
        SadakaneLcp sad = SadakaneLcp::build(f.h, f.sa);
        WeeLcp wee = WeeLcp::build(f.h, f.sa, WeeParams{.kappa = 8, .lambda = 4, .s = 6});

        PlainLcpAccessor pa(f.h);
        SadakaneLcpAccessor sa_acc(sad, f.sa);
        WeeLcpAccessor wa(wee, f.sa, f.t);
        StNav np(pa), ns(sa_acc), nw(wa);

        for (std::uint64_t i = 2; i <= n; ++i) {
            auto ep = naive_psv(f.h, i);
            auto en = naive_nsv(f.h, i);
            REQUIRE(np.psv(i) == ep);
            REQUIRE(np.nsv(i) == en);
            REQUIRE(ns.psv(i) == ep);
            REQUIRE(nw.nsv(i) == en);
        }

        std::uniform_int_distribution<std::uint64_t> dist(2, n);
        for (int q = 0; q < 400; ++q) {
            std::uint64_t l = dist(rng), r = dist(rng);
            if (l > r) std::swap(l, r);
            std::uint64_t expect = naive_rmq(f.h, l, r);
            REQUIRE(np.rmq(l, r) == expect);
            REQUIRE(ns.rmq(l, r) == expect);
            REQUIRE(nw.rmq(l, r) == expect);
        }
    }
}

TEST_CASE("parent_interval matches the brute-force interval tree") {
    std::mt19937_64 rng(23);
    for (const auto& raw : {testutil::random_text(rng, 300, 2),
                            testutil::random_text(rng, 300, 26), testutil::periodic_text(200)}) {
        Fixture f(raw);
        PlainLcpAccessor acc(f.h);
        StNav nav(acc);
        std::vector<testutil::BruteInterval> tree = testutil::brute_interval_tree(f.h.h);
        for (const auto& node : tree) {
            IntervalNode got{node.left, node.right, node.depth};
            auto parent = nav.parent_interval(got);
            if (!node.parent.has_value()) {
                REQUIRE_FALSE(parent.has_value());
            } else {
                const auto& exp = tree[*node.parent];
                REQUIRE(parent.has_value());
                REQUIRE(*parent == IntervalNode{exp.left, exp.right, exp.depth});
            }
        }
    }
}

TEST_CASE("parent chains terminate with strictly decreasing depth") {
    std::mt19937_64 rng(31);
    Fixture f(testutil::random_text(rng, 600, 4));
    PlainLcpAccessor acc(f.h);
    StNav nav(acc);
    const std::uint64_t n = f.t.n();
    for (const auto& node : testutil::brute_interval_tree(f.h.h)) {
        IntervalNode cur{node.left, node.right, node.depth};
        std::uint64_t steps = 0;
        for (auto p = nav.parent_interval(cur); p.has_value(); p = nav.parent_interval(cur)) {
            REQUIRE(p->depth < cur.depth);
            REQUIRE(p->left <= cur.left);
            REQUIRE(p->right >= cur.right);
            cur = *p;
            REQUIRE(++steps <= n);
        }
        CHECK(cur == IntervalNode{1, n, 0});
    }
}

TEST_CASE("tiny inputs") {
    Fixture f("");
    PlainLcpAccessor acc(f.h);
    StNav nav(acc);
    CHECK_FALSE(nav.parent_interval(IntervalNode{1, 1, 0}).has_value());
    CHECK_THROWS_AS(nav.rmq(2, 2), std::out_of_range);
}
