#include <doctest.h>

#include "bicover/constructions.hpp"
#include "bicover/generators.hpp"
#include "bicover/oracles.hpp"
#include "helpers.hpp"

using namespace bicover;

TEST_CASE("kn_cover sizes and validity") {
    auto check = [](int n, int k) {
        auto c = kn_cover(n, k);
        const int expect = ceil_log2_ratio(static_cast<std::uint64_t>(n),
                                           static_cast<std::uint64_t>(k - 1));
        CHECK(c.size() == expect);
        CHECK(verify_cover(gen_complete(n, k), c).valid);
    };
    check(9, 3);  // 3 bicolorings
    check(4, 2);  // 2 bicolorings
    check(3, 3);  // single edge: 1 bicoloring
    CHECK(kn_cover(9, 3).size() == 3);
    CHECK(kn_cover(3, 3).size() == 1);
    CHECK_THROWS_AS(kn_cover(3, 4), InvalidInput);
}

TEST_CASE("kn_cover restricts to subhypergraphs") {
    // a cover of the complete hypergraph stays valid on any k-uniform
    // subhypergraph over the same vertex set
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SplitMix64 rng(seed);
        const int k = 2 + static_cast<int>(rng.next() % 3);
        const int n = k + static_cast<int>(rng.next() % 6);
        auto sub = gen_random_kuniform(n, k, 0.4, rng.next());
        CHECK(verify_cover(sub, kn_cover(n, k)).valid);
    }
}

TEST_CASE("mbc on the worked instances") {
    auto k4 = gen_complete(4, 2);
    auto t = mbc(k4, {{0, 1}, {2, 3}});
    CHECK(t.bound == 3); // ceil(log2 2) + 2
    CHECK(t.cover.size() <= 3);
    CHECK(verify_cover(k4, t.cover).valid);
    CHECK(t.within_bound());

    // |M| = 1: a single edge plus edges meeting it
    auto star = Hypergraph::make(5, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    auto t1 = mbc(star, {{0, 1}});
    CHECK(t1.cover.size() <= 2);
    CHECK(verify_cover(star, t1.cover).valid);

    auto k93 = gen_complete(9, 3);
    auto m = greedy_maximal_matching(k93);
    REQUIRE(m.size() == 3);
    auto t9 = mbc(k93, m);
    CHECK(t9.bound == 4); // ceil(log2 3) + 2
    CHECK(t9.cover.size() <= 4);
    CHECK(verify_cover(k93, t9.cover).valid);
}

TEST_CASE("mbc rejects bad matchings") {
    auto k4 = gen_complete(4, 2);
    CHECK_THROWS_AS(mbc(k4, {{0, 1}, {1, 2}}), InvalidInput); // not a matching
    CHECK_THROWS_AS(mbc(k4, {{0, 1}}), InvalidInput);         // not maximal
    CHECK_THROWS_AS(mbc(Hypergraph::make(4, 2, {{0, 1}}), {{2, 3}}), InvalidInput); // non-edge
}

TEST_CASE("hbc on the worked instances") {
    auto single = Hypergraph::make(3, 3, {{0, 1, 2}});
    auto t = hbc(single, {0});
    CHECK(t.cover.size() == 1);
    CHECK(verify_cover(single, t.cover).valid);

    auto k93 = gen_complete(9, 3);
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
    auto t9 = hbc(k93, all);
    CHECK(t9.bound == 4); // ceil(log2 ceil(9/2)) + 1
    CHECK(t9.cover.size() <= 4);
    CHECK(verify_cover(k93, t9.cover).valid);

    auto c7 = gen_odd_cycle(7);
    auto h = greedy_hitting_set(c7);
    auto tc = hbc(c7, h);
    CHECK(tc.cover.size() <= ceil_log2(h.size()) + 1);
    CHECK(verify_cover(c7, tc.cover).valid);

    CHECK_THROWS_AS(hbc(c7, {0}), InvalidInput); // misses edges
}

TEST_CASE("construction bounds hold on random instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = testutil::random_instance(seed);
        auto m = greedy_maximal_matching(g);
        auto tm = mbc(g, m);
        CHECK(verify_cover(g, tm.cover).valid);
        CHECK(tm.within_bound());
        if (!m.empty())
            CHECK(tm.cover.size() <= ceil_log2(m.size()) + 2);

        auto h = greedy_hitting_set(g);
        auto th = hbc(g, h);
        if (g.m() > 0) {
            CHECK(verify_cover(g, th.cover).valid);
            const int groups = (static_cast<int>(h.size()) + g.k() - 2) / (g.k() - 1);
            CHECK(th.cover.size() <= ceil_log2(static_cast<std::uint64_t>(groups)) + 1);
        }

        // the matching's vertex union is a hitting set; the theorem bound
        // with |H| = |M| k must hold as well
        if (!m.empty()) {
            std::vector<int> hm;
            for (const auto& e : m) hm.insert(hm.end(), e.begin(), e.end());
            auto tu = hbc(g, hm);
            CHECK(verify_cover(g, tu.cover).valid);
            const std::uint64_t hsize = m.size() * static_cast<std::uint64_t>(g.k());
            CHECK(tu.cover.size() <=
                  ceil_log2_ratio(hsize, static_cast<std::uint64_t>(g.k() - 1)) + 1);
        }
    }
}

TEST_CASE("construction covers match the oracle optimum order of magnitude") {
    // sanity anchor: on K9^3 the oracle needs 3 and mbc/hbc stay within
    // their theorem budgets above it
    auto k93 = gen_complete(9, 3);
    auto oracle = exact_chi_c(k93);
    CHECK(oracle.chi_c == 3);
    auto tm = mbc(k93, greedy_maximal_matching(k93));
    CHECK(tm.cover.size() >= oracle.chi_c);
    auto th = hbc(k93, greedy_hitting_set(k93));
    CHECK(th.cover.size() >= oracle.chi_c);
}
