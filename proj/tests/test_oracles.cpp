#include <doctest.h>

#include <algorithm>
#include <map>

#include "bicover/generators.hpp"
#include "bicover/oracles.hpp"
#include "helpers.hpp"

using namespace bicover;

namespace {

// K5^3 minus {1,2,3} and {1,2,4} (1-based), the bicolorable example.
Hypergraph k53_minus_two() {
    auto k53 = gen_complete(5, 3);
    std::vector<Edge> edges;
    for (const auto& e : k53.edges())
        if (e != Edge{0, 1, 2} && e != Edge{0, 1, 3}) edges.push_back(e);
    return Hypergraph::make(5, 3, std::move(edges));
}

} // namespace

TEST_CASE("exact_chi_c on the worked instances") {
    auto check = [](const Hypergraph& g, int expect) {
        auto r = exact_chi_c(g);
        REQUIRE_FALSE(r.exceeded_limit);
        CHECK(r.chi_c == expect);
        CHECK(r.witness.size() == expect);
        if (g.m() > 0) CHECK(verify_cover(g, r.witness).valid);
    };
    check(gen_complete(4, 2), 2);
    check(gen_odd_cycle(7), 2);
    check(k53_minus_two(), 1);
    check(gen_g1(), 2);
    CHECK(exact_chi_c(Hypergraph::make(3, 2, {})).chi_c == 0);
}

TEST_CASE("exact_chi_c respects caps and limits") {
    CHECK_THROWS_AS(exact_chi_c(gen_complete(15, 2)), CapExceeded);
    auto r = exact_chi_c(gen_odd_cycle(7), 1); // no 1-cover exists
    CHECK(r.exceeded_limit);
}

TEST_CASE("exact_chi_c agrees with the definitional search on tiny instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SplitMix64 rng(seed);
        const int k = 2 + static_cast<int>(rng.next() % 2);
        const int n = k + 1 + static_cast<int>(rng.next() % (5 - k));
        auto g = gen_random_kuniform(n, k, 0.3 + 0.5 * rng.next_unit(), rng.next());
        const int limit = ceil_log2_ratio(static_cast<std::uint64_t>(n),
                                          static_cast<std::uint64_t>(k - 1));
        CHECK(exact_chi_c(g).chi_c == testutil::naive_chi_c(g, limit));
    }
}

TEST_CASE("exact_chromatic") {
    auto k4 = exact_chromatic(gen_complete(4, 2));
    CHECK(k4.chi == 4);
    CHECK(is_proper(gen_complete(4, 2), k4.witness));

    auto c7g = gen_odd_cycle(7);
    auto c7 = exact_chromatic(c7g);
    CHECK(c7.chi == 3);
    // independent recheck that 2 colors cannot work: enumerate all of them
    bool two_works = false;
    for (std::uint32_t p = 0; p < (1u << 7); ++p) {
        std::vector<int> cols(7);
        for (int v = 0; v < 7; ++v) cols[static_cast<std::size_t>(v)] = (p >> v) & 1;
        if (is_proper(c7g, ProperColoring::of(cols))) two_works = true;
    }
    CHECK_FALSE(two_works);

    auto k93 = exact_chromatic(gen_complete(9, 3));
    CHECK(k93.chi == 5);
    std::map<int, int> class_size;
    for (int col : k93.witness.colors) ++class_size[col];
    for (const auto& [col, sz] : class_size) CHECK(sz <= 2);

    CHECK(exact_chromatic(Hypergraph::make(4, 2, {})).chi == 1);
}

TEST_CASE("exact_alpha") {
    auto g1 = exact_alpha(gen_g1());
    CHECK(g1.alpha == 5);
    CHECK(g1.exact);

    CHECK(exact_alpha(Hypergraph::make(6, 2, {})).alpha == 6);
    CHECK(exact_alpha(gen_complete(5, 3)).alpha == 2);
}

TEST_CASE("exact_gamma on the small table") {
    auto run = [](const Hypergraph& g) {
        auto cc = exact_chi_c(g);
        auto ga = exact_gamma(g, cc.chi_c);
        if (!ga.convention) {
            REQUIRE(verify_cover(g, ga.witness).valid);
            CHECK(ga.witness.size() == cc.chi_c);
            CHECK(canonical_partition(g, ga.witness).max_part_size() == ga.gamma);
        }
        return ga.gamma;
    };
    CHECK(run(gen_complete(4, 2)) == 1);
    CHECK(run(gen_odd_cycle(7)) == 3);
    CHECK(run(gen_odd_cycle(5)) == 2);
    CHECK(run(k53_minus_two()) == 3);

    // edgeless convention
    auto ga = exact_gamma(Hypergraph::make(5, 2, {}), 0);
    CHECK(ga.gamma == 5);
    CHECK(ga.convention);

    // refusal above the x-cap
    OracleCaps tight;
    tight.x_cap = 1;
    CHECK_THROWS_AS(exact_gamma(gen_complete(4, 2), 2, tight), CapExceeded);
}

TEST_CASE("exact_gamma matches the definitional enumeration") {
    // covers the x = 3 path: K5 needs three bicolorings and gamma stays 1
    auto k5 = gen_complete(5, 2);
    REQUIRE(exact_chi_c(k5).chi_c == 3);
    CHECK(exact_gamma(k5, 3).gamma == 1);
    CHECK(testutil::naive_gamma(k5, 3) == 1);

    CHECK(exact_gamma(gen_odd_cycle(5), 2).gamma == testutil::naive_gamma(gen_odd_cycle(5), 2));
    CHECK(exact_gamma(gen_odd_cycle(9), 2).gamma == 4); // (n-1)/2 for odd cycles
    CHECK(exact_chi_c(gen_odd_cycle(9)).chi_c == 2);

    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SplitMix64 rng(seed);
        const int n = 4 + static_cast<int>(rng.next() % 2);
        auto g = gen_random_kuniform(n, 2, 0.4 + 0.4 * rng.next_unit(), rng.next());
        auto cc = exact_chi_c(g);
        if (cc.chi_c < 1 || cc.chi_c > 3) continue;
        CHECK(exact_gamma(g, cc.chi_c).gamma == testutil::naive_gamma(g, cc.chi_c));
    }
}

TEST_CASE("exact_omega") {
    CHECK(exact_omega(gen_complete(9, 3)).omega == 9);

    // K5^3 minus one edge: every 5-set fails, some 4-set works
    auto k53 = gen_complete(5, 3);
    std::vector<Edge> edges(k53.edges().begin() + 1, k53.edges().end());
    auto minus1 = Hypergraph::make(5, 3, std::move(edges));
    auto om = exact_omega(minus1);
    CHECK(om.omega == 4);

    CHECK(exact_omega(gen_g1()).omega == 8);

    auto empty = exact_omega(Hypergraph::make(4, 3, {}));
    CHECK(empty.omega == 2);
    CHECK(empty.convention);
}

TEST_CASE("oracle_report invariants hold on random instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        SplitMix64 rng(seed);
        const int k = 2 + static_cast<int>(rng.next() % 2);
        const int n = k + 2 + static_cast<int>(rng.next() % 6);
        auto g = gen_random_kuniform(n, k, 0.2 + 0.6 * rng.next_unit(), rng.next());
        auto rep = oracle_report(g);
        for (const auto& f : rep.check_failures) MESSAGE(f);
        CHECK(rep.checks_passed());
        CHECK(rep.chi_c == ceil_log2(static_cast<std::uint64_t>(rep.chi)));
        if (rep.gamma) {
            CHECK(rep.alpha >= *rep.gamma);
            if (g.m() > 0) CHECK(*rep.gamma >= k - 1);
            const std::uint64_t parts =
                (static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(*rep.gamma) - 1) /
                static_cast<std::uint64_t>(*rep.gamma);
            CHECK(rep.chi_c >= ceil_log2(parts));
        }
        const std::uint64_t alpha_parts =
            (static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(rep.alpha) - 1) /
            static_cast<std::uint64_t>(rep.alpha);
        CHECK(rep.chi_c >= ceil_log2(alpha_parts));
    }
}

TEST_CASE("m_search exact results") {
    auto r1 = m_search(2, 1, 5);
    CHECK(r1.exact);
    CHECK(r1.m_min == 3);
    REQUIRE(r1.witness.has_value());
    CHECK(exact_chi_c(*r1.witness, 1).exceeded_limit);

    auto r2 = m_search(2, 2, 5);
    CHECK(r2.exact);
    CHECK(r2.m_min == 10);
    REQUIRE(r2.witness.has_value());
    CHECK(*r2.witness == gen_complete(5, 2));
    CHECK(r2.lower_exclusive == 2); // strictly above 2^{(k-1)x-1} = 2
}

TEST_CASE("m_search bracket report for k=3, x=2") {
    auto r = m_search(3, 2, 9, /*budget=*/4000);
    CHECK_FALSE(r.exact);
    CHECK(r.lower_exclusive == 8);
    CHECK(r.kn_upper_t == 9);
    CHECK(r.kn_upper_m == 84);
    CHECK(r.kn_verified);
    CHECK(r.verified_coverable_up_to >= 2);
}
