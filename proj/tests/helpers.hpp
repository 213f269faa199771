#ifndef BICOVER_TESTS_HELPERS_HPP
#define BICOVER_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "bicover/cover.hpp"
#include "bicover/generators.hpp"
#include "bicover/hypergraph.hpp"
#include "bicover/random_bits.hpp"

namespace testutil {

// Naive re-implementation of cover validity, straight from the definition
// and independent of the edge-mask machinery.
inline bool naive_valid(const bicover::Hypergraph& g, const bicover::Cover& c) {
    for (const auto& e : g.edges()) {
        bool covered = false;
        for (const auto& x : c.colorings) {
            bool saw0 = false, saw1 = false;
            for (int v : e) (x.bit(v) ? saw1 : saw0) = true;
            if (saw0 && saw1) { covered = true; break; }
        }
        if (!covered && !c.colorings.empty()) return false;
        if (c.colorings.empty() && !g.edges().empty()) return false;
    }
    return true;
}

// Exhaustive chi_c straight from the definition: try every labeled tuple of
// bicolorings of size x = 0,1,2,...  Only usable for tiny n.
inline int naive_chi_c(const bicover::Hypergraph& g, int limit) {
    using namespace bicover;
    if (g.m() == 0) return 0;
    const std::uint64_t space = std::uint64_t{1} << g.n();
    for (int x = 1; x <= limit; ++x) {
        std::vector<std::uint64_t> pats(static_cast<std::size_t>(x), 0);
        while (true) {
            Cover c;
            for (std::uint64_t p : pats)
                c.colorings.push_back(Bicoloring::from_pattern(g.n(), p));
            if (naive_valid(g, c)) return x;
            int i = x - 1;
            while (i >= 0 && pats[static_cast<std::size_t>(i)] == space - 1) {
                pats[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++pats[static_cast<std::size_t>(i)];
        }
    }
    return limit + 1;
}

// Definitional gamma for tiny instances: enumerate every ordered tuple of
// x bicolorings over the full 2^{nx} space, keep the valid ones, and take
// the largest class of vertices with identical color bit vectors.
inline int naive_gamma(const bicover::Hypergraph& g, int x) {
    using namespace bicover;
    const std::uint64_t space = std::uint64_t{1} << g.n();
    std::vector<std::uint64_t> pats(static_cast<std::size_t>(x), 0);
    int best = -1;
    while (true) {
        Cover c;
        for (std::uint64_t p : pats) c.colorings.push_back(Bicoloring::from_pattern(g.n(), p));
        if (naive_valid(g, c)) {
            std::map<std::vector<int>, int> classes;
            for (int v = 0; v < g.n(); ++v) {
                std::vector<int> vec;
                for (std::uint64_t p : pats) vec.push_back(static_cast<int>((p >> v) & 1));
                ++classes[vec];
            }
            for (const auto& [vec, count] : classes) best = std::max(best, count);
        }
        int i = x - 1;
        while (i >= 0 && pats[static_cast<std::size_t>(i)] == space - 1) {
            pats[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++pats[static_cast<std::size_t>(i)];
    }
    return best;
}

// Small random instance for property tests, deterministic per seed.
inline bicover::Hypergraph random_instance(std::uint64_t seed) {
    bicover::SplitMix64 rng(seed);
    const int k = 2 + static_cast<int>(rng.next() % 2);
    const int n = k + 2 + static_cast<int>(rng.next() % 6);
    const double prob = 0.15 + 0.7 * rng.next_unit();
    return bicover::gen_random_kuniform(n, k, prob, rng.next());
}

inline bicover::Cover random_cover(std::uint64_t seed, int n, int x) {
    bicover::SplitMix64 rng(seed);
    bicover::Cover c;
    for (int j = 0; j < x; ++j)
        c.colorings.push_back(bicover::Bicoloring::from_pattern(
            n, rng.next() & ((std::uint64_t{1} << n) - 1)));
    return c;
}

} // namespace testutil

#endif
