#include <doctest.h>

#include <algorithm>
#include <set>

#include "bicover/constructions.hpp"
#include "bicover/cover.hpp"
#include "bicover/generators.hpp"
#include "bicover/hypergraph.hpp"
#include "helpers.hpp"

using namespace bicover;

namespace {

Cover cover_of(std::initializer_list<const char*> strings) {
    Cover c;
    for (const char* s : strings) {
        std::vector<std::uint8_t> bits;
        for (const char* p = s; *p; ++p) bits.push_back(static_cast<std::uint8_t>(*p - '0'));
        c.colorings.emplace_back(std::move(bits));
    }
    return c;
}

// C7 cover from the worked example: X1 splits odd/even, X2 flips the last
// vertex so the closing edge is covered.
Cover c7_cover() { return cover_of({"0101010", "0101011"}); }

} // namespace

TEST_CASE("hypergraph canonical form") {
    int dups = 0;
    auto g = Hypergraph::make(4, 2, {{1, 0}, {2, 3}, {0, 1}}, &dups);
    CHECK(dups == 1);
    CHECK(g.m() == 2);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{2, 3});

    CHECK_THROWS_AS(Hypergraph::make(4, 2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::make(4, 2, {{0, 4}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::make(4, 2, {{0, 1, 2}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::make(4, 5, {}), InvalidInput);
}

TEST_CASE("verify_cover on the worked examples") {
    auto c7 = gen_odd_cycle(7);
    auto cert = verify_cover(c7, c7_cover());
    CHECK(cert.valid);
    // closing edge {0,6} is the one X2 fixes
    for (int e = 0; e < c7.m(); ++e) {
        if (c7.edge(e) == Edge{0, 6})
            CHECK(cert.witness[static_cast<std::size_t>(e)] == 1);
    }

    // all-zeros bicoloring never covers a nonempty hypergraph
    Cover zeros = cover_of({"0000000"});
    CHECK_FALSE(verify_cover(c7, zeros).valid);

    // K5^3 with the figure's two bicolorings (1-based {1,2,3}/{4,5} and
    // {1,2,4}/{3,5} mapped to 0-based)
    auto k53 = gen_complete(5, 3);
    Cover fig = cover_of({"00011", "00101"});
    CHECK(verify_cover(k53, fig).valid);

    // dimension mismatch
    CHECK_THROWS_AS(verify_cover(c7, cover_of({"01"})), DimensionError);
}

TEST_CASE("uncovered_mask basics") {
    auto k4 = gen_complete(4, 2);
    Bicoloring x = Bicoloring::from_pattern(4, 0b1100); // vertices 2,3 get color 1
    auto mask = uncovered_mask(k4, x);
    // hand enumeration of the 6 edges: only {0,1} and {2,3} are monochromatic
    std::set<Edge> mono;
    for (int e = 0; e < k4.m(); ++e)
        if (mask.test(e)) mono.insert(k4.edge(e));
    CHECK(mono == std::set<Edge>{{0, 1}, {2, 3}});

    auto edgeless = Hypergraph::make(5, 2, {});
    CHECK(uncovered_mask(edgeless, Bicoloring::from_pattern(5, 0b10101)).none());

    auto c7 = gen_odd_cycle(7);
    auto m1 = uncovered_mask(c7, c7_cover().colorings[0]);
    CHECK(m1.count() == 1);
    CHECK(c7.edge(m1.first()) == Edge{0, 6});
}

TEST_CASE("canonical partition of G1 under the two interleaved bicolorings") {
    auto g1 = gen_g1();
    // X1 = 001100110011, X2 = 010101010101 over 1-based vertices
    Cover c1 = cover_of({"001100110011", "010101010101"});
    auto part = canonical_partition(g1, c1);
    CHECK(part.cover_valid);
    REQUIRE(part.parts.size() == 4);
    CHECK(part.parts[0] == std::vector<int>{0, 4, 8});
    CHECK(part.parts[1] == std::vector<int>{1, 5, 9});
    CHECK(part.parts[2] == std::vector<int>{2, 6, 10});
    CHECK(part.parts[3] == std::vector<int>{3, 7, 11});
}

TEST_CASE("canonical partition edge cases") {
    auto g = Hypergraph::make(5, 2, {});
    auto part = canonical_partition(g, Cover{});
    REQUIRE(part.parts.size() == 1);
    CHECK(part.parts[0].size() == 5);

    // distinct vectors for every vertex -> singletons
    auto k4 = gen_complete(4, 2);
    Cover distinct = cover_of({"0101", "0011"});
    auto p2 = canonical_partition(k4, distinct);
    CHECK(p2.parts.size() == 4);
}

TEST_CASE("coloring_from_cover") {
    auto c7 = gen_odd_cycle(7);
    auto pc = coloring_from_cover(c7, c7_cover());
    CHECK(is_proper(c7, pc));
    CHECK(pc.palette_size <= 4);
    // bit 0 from X1, bit 1 from X2: vertex 6 has X1=0, X2=1 -> color 2
    CHECK(pc.colors[6] == 2);

    // classes coincide with the canonical parts on G1
    auto g1 = gen_g1();
    Cover c1 = cover_of({"001100110011", "010101010101"});
    auto pg1 = coloring_from_cover(g1, c1);
    CHECK(pg1.palette_size == 4);
    auto part = canonical_partition(g1, c1);
    for (const auto& p : part.parts)
        for (int v : p)
            CHECK(pg1.colors[static_cast<std::size_t>(v)] ==
                  pg1.colors[static_cast<std::size_t>(p[0])]);

    // single-bicoloring cover of a bipartite graph reproduces the bipartition
    auto path = Hypergraph::make(4, 2, {{0, 1}, {1, 2}, {2, 3}});
    Cover bip = cover_of({"0101"});
    auto pb = coloring_from_cover(path, bip);
    CHECK(pb.palette_size == 2);

    // invalid cover refused
    Cover zeros = cover_of({"0000000"});
    CHECK_THROWS_AS(coloring_from_cover(c7, zeros), InvalidInput);
}

TEST_CASE("cover_from_coloring") {
    auto k4 = gen_complete(4, 2);
    auto c = cover_from_coloring(k4, ProperColoring::of({0, 1, 2, 3}));
    CHECK(c.size() == 2);
    CHECK(verify_cover(k4, c).valid);

    auto path = Hypergraph::make(4, 2, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(cover_from_coloring(path, ProperColoring::of({0, 1, 0, 1})).size() == 1);

    // partition into u independent sets -> cover of ceil(log u)
    auto g1 = gen_g1();
    std::vector<int> cols(12);
    for (int v = 0; v < 12; ++v) cols[static_cast<std::size_t>(v)] = v % 4; // columns
    auto cg1 = cover_from_coloring(g1, ProperColoring::of(cols));
    CHECK(cg1.size() == 2);
    CHECK(verify_cover(g1, cg1).valid);

    // improper coloring refused
    CHECK_THROWS_AS(cover_from_coloring(k4, ProperColoring::of({0, 0, 1, 2})), InvalidInput);
}

TEST_CASE("dependency") {
    CHECK(dependency(Hypergraph::make(3, 3, {{0, 1, 2}})) == 0);
    CHECK(dependency(gen_complete(4, 2)) == 4);
    CHECK(dependency(Hypergraph::make(6, 3, {{0, 1, 2}, {3, 4, 5}})) == 0);
}

TEST_CASE("greedy maximal matching") {
    auto m = greedy_maximal_matching(gen_complete(4, 2));
    CHECK(m == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(greedy_maximal_matching(Hypergraph::make(4, 2, {})).empty());
    CHECK(greedy_maximal_matching(gen_complete(5, 3)) == std::vector<Edge>{{0, 1, 2}});
}

TEST_CASE("greedy hitting set") {
    CHECK(greedy_hitting_set(Hypergraph::make(3, 3, {{0, 1, 2}})) == std::vector<int>{0});
    CHECK(greedy_hitting_set(Hypergraph::make(4, 2, {})).empty());
    auto c7 = gen_odd_cycle(7);
    auto h = greedy_hitting_set(c7);
    CHECK(h.size() <= 4);
    for (const auto& e : c7.edges()) {
        bool hit = false;
        for (int v : e)
            if (std::binary_search(h.begin(), h.end(), v)) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("core invariants on random instances") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = testutil::random_instance(seed);
        auto c = testutil::random_cover(seed * 1009, g.n(), 1 + static_cast<int>(seed % 3));

        // two validity routes agree: certificate vs AND of uncovered masks
        auto cert = verify_cover(g, c);
        EdgeBitset acc(g.m());
        acc.set_all();
        for (const auto& x : c.colorings) acc &= uncovered_mask(g, x);
        CHECK(cert.valid == (acc.none() && !(c.colorings.empty() && g.m() > 0)));
        CHECK(cert.valid == testutil::naive_valid(g, c));

        // canonical partition: disjoint, exhaustive, at most 2^|C| parts
        auto part = canonical_partition(g, c);
        CHECK(part.parts.size() <= (std::size_t{1} << c.size()));
        std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
        for (const auto& p : part.parts)
            for (int v : p) ++seen[static_cast<std::size_t>(v)];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));

        if (cert.valid) {
            // each part is independent, and the round trip shrinks or keeps size
            for (const auto& p : part.parts) {
                std::set<int> ps(p.begin(), p.end());
                for (const auto& e : g.edges()) {
                    bool inside = std::all_of(e.begin(), e.end(),
                                              [&](int v) { return ps.count(v) > 0; });
                    CHECK_FALSE(inside);
                }
            }
            auto rt = cover_from_coloring(g, coloring_from_cover(g, c));
            CHECK(verify_cover(g, rt).valid);
            CHECK(rt.size() <= c.size());
        }

        // matching: pairwise disjoint and maximal
        auto m = greedy_maximal_matching(g);
        std::set<int> used;
        for (const auto& e : m)
            for (int v : e) CHECK(used.insert(v).second);
        for (const auto& e : g.edges()) {
            bool meets = std::any_of(e.begin(), e.end(), [&](int v) { return used.count(v) > 0; });
            CHECK(meets);
        }

        // hitting set hits everything
        auto h = greedy_hitting_set(g);
        for (const auto& e : g.edges()) {
            bool hit = std::any_of(e.begin(), e.end(), [&](int v) {
                return std::binary_search(h.begin(), h.end(), v);
            });
            CHECK(hit);
        }

        // dependency bounds
        const int d = dependency(g);
        CHECK(d <= std::max(0, g.m() - 1));
        bool pairwise_disjoint = true;
        auto vm = g.vertex_masks();
        for (std::size_t a = 0; a < vm.size() && pairwise_disjoint; ++a)
            for (std::size_t b = a + 1; b < vm.size(); ++b)
                if ((vm[a] & vm[b]).any()) { pairwise_disjoint = false; break; }
        CHECK((d == 0) == pairwise_disjoint);
    }
}
