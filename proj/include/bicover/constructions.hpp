#ifndef BICOVER_CONSTRUCTIONS_HPP
#define BICOVER_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bicover/bits.hpp"
#include "bicover/cover.hpp"
#include "bicover/errors.hpp"
#include "bicover/hypergraph.hpp"

namespace bicover {

/// Run record for a deterministic cover construction: the emitted cover,
/// the theorem-level size bound it must obey, and one line per level.
struct ConstructionTrace {
    std::string algorithm;
    int input_size = 0; // |M| for mbc, |H| for hbc, n for kn_cover
    int bound = 0;
    Cover cover;
    std::vector<std::string> levels;

    bool within_bound() const { return cover.size() <= bound; }
};

/// Cover of the complete k-uniform hypergraph on n vertices of size
/// ceil(log2 ceil(n/(k-1))): vertices are cut into groups of at most k-1,
/// and bicoloring i assigns each vertex bit i of its group index.  Any k
/// vertices span two groups whose indices differ in some bit.
inline Cover kn_cover(int n, int k) {
    if (k < 2 || k > n)
        throw InvalidInput("kn_cover: need 2 <= k <= n, got k=" + std::to_string(k) +
                           ", n=" + std::to_string(n));
    const int groups = (n + k - 2) / (k - 1);
    const int x = ceil_log2(static_cast<std::uint64_t>(groups));
    Cover c;
    for (int i = 0; i < x; ++i) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            bits[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(((v / (k - 1)) >> i) & 1);
        c.colorings.emplace_back(std::move(bits));
    }
    return c;
}

namespace detail {

inline void require_maximal_matching(const Hypergraph& g, const std::vector<Edge>& m) {
    EdgeBitset used(g.n());
    for (const auto& e : m) {
        if (!std::binary_search(g.edges().begin(), g.edges().end(), e))
            throw InvalidInput("matching contains a non-edge");
        for (int v : e) {
            if (used.test(v)) {
                std::string s = "not a matching: edge {";
                for (std::size_t i = 0; i < e.size(); ++i)
                    s += (i ? "," : "") + std::to_string(e[i] + 1);
                s += "} shares a vertex with an earlier matched edge";
                throw InvalidInput(s);
            }
            used.set(v);
        }
    }
    for (const auto& e : g.edges()) {
        bool hit = false;
        for (int v : e)
            if (used.test(v)) { hit = true; break; }
        if (!hit) {
            std::string s = "matching is not maximal: edge {";
            for (std::size_t i = 0; i < e.size(); ++i)
                s += (i ? "," : "") + std::to_string(e[i] + 1);
            s += "} is disjoint from it";
            throw InvalidInput(s);
        }
    }
}

} // namespace detail

/// Matching-based cover of size at most ceil(log2 |M|) + 2.  Level 0 splits
/// matched from unmatched vertices; the recursive halving of M is folded
/// into one shared bicoloring per depth (vertices outside the groups split
/// at that depth carry their previous color); a final bicoloring splits
/// each matched edge internally.
inline ConstructionTrace mbc(const Hypergraph& g, std::vector<Edge> matching) {
    for (auto& e : matching) std::sort(e.begin(), e.end());
    detail::require_maximal_matching(g, matching);
    ConstructionTrace trace;
    trace.algorithm = "mbc";
    const int msize = static_cast<int>(matching.size());
    trace.input_size = msize;
    if (msize == 0) { // edgeless hypergraph
        trace.bound = 0;
        return trace;
    }
    trace.bound = ceil_log2(static_cast<std::uint64_t>(msize)) + 2;

    const int n = g.n();
    std::vector<std::uint8_t> current(static_cast<std::size_t>(n), 1);
    for (const auto& e : matching)
        for (int v : e) current[static_cast<std::size_t>(v)] = 0;
    trace.cover.colorings.emplace_back(current);
    trace.levels.push_back("level 0: matched vertices 0, rest 1");

    // groups of matched-edge indices, halved once per depth
    std::vector<std::vector<int>> groups;
    {
        std::vector<int> all(static_cast<std::size_t>(msize));
        for (int i = 0; i < msize; ++i) all[static_cast<std::size_t>(i)] = i;
        groups.push_back(std::move(all));
    }
    int depth = 0;
    while (true) {
        bool any_split = false;
        std::vector<std::vector<int>> next;
        std::vector<std::uint8_t> bits(current);
        for (const auto& grp : groups) {
            if (grp.size() <= 1) {
                next.push_back(grp);
                continue;
            }
            any_split = true;
            const std::size_t half = grp.size() / 2; // A takes floor(|M|/2)
            std::vector<int> a(grp.begin(), grp.begin() + static_cast<std::ptrdiff_t>(half));
            std::vector<int> b(grp.begin() + static_cast<std::ptrdiff_t>(half), grp.end());
            for (int ei : a)
                for (int v : matching[static_cast<std::size_t>(ei)]) bits[static_cast<std::size_t>(v)] = 0;
            for (int ei : b)
                for (int v : matching[static_cast<std::size_t>(ei)]) bits[static_cast<std::size_t>(v)] = 1;
            next.push_back(std::move(a));
            next.push_back(std::move(b));
        }
        if (!any_split) break;
        ++depth;
        current = bits;
        trace.cover.colorings.emplace_back(std::move(bits));
        trace.levels.push_back("level " + std::to_string(depth) + ": halved " +
                               std::to_string(groups.size()) + " group(s)");
        groups = std::move(next);
    }

    // final level: internal split of each (disjoint) matched edge
    {
        std::vector<std::uint8_t> bits(current);
        for (const auto& e : matching) {
            const std::size_t zeros = (e.size() + 1) / 2;
            for (std::size_t i = 0; i < e.size(); ++i)
                bits[static_cast<std::size_t>(e[i])] = i < zeros ? 0 : 1;
        }
        trace.cover.colorings.emplace_back(std::move(bits));
        trace.levels.push_back("final: per-edge internal split");
    }
    return trace;
}

/// Hitting-set cover of size at most ceil(log2 ceil(|H|/(k-1))) + 1.  The
/// first bicoloring separates H; residual monochromatic edges lie inside H
/// and are split by the kn_cover group scheme on H's vertices.
inline ConstructionTrace hbc(const Hypergraph& g, std::vector<int> hitting) {
    std::sort(hitting.begin(), hitting.end());
    hitting.erase(std::unique(hitting.begin(), hitting.end()), hitting.end());
    std::vector<std::uint8_t> in_h(static_cast<std::size_t>(g.n()), 0);
    for (int v : hitting) {
        if (v < 0 || v >= g.n()) throw InvalidInput("hitting set vertex out of range");
        in_h[static_cast<std::size_t>(v)] = 1;
    }
    for (const auto& e : g.edges()) {
        bool hit = false;
        for (int v : e)
            if (in_h[static_cast<std::size_t>(v)]) { hit = true; break; }
        if (!hit) {
            std::string s = "not a hitting set: edge {";
            for (std::size_t i = 0; i < e.size(); ++i)
                s += (i ? "," : "") + std::to_string(e[i] + 1);
            s += "} is missed";
            throw InvalidInput(s);
        }
    }
    ConstructionTrace trace;
    trace.algorithm = "hbc";
    const int h = static_cast<int>(hitting.size());
    trace.input_size = h;
    if (g.m() == 0) {
        trace.bound = 0;
        return trace;
    }
    const int k = g.k();
    const int groups = (h + k - 2) / (k - 1);
    trace.bound = ceil_log2(static_cast<std::uint64_t>(std::max(groups, 1))) + 1;

    std::vector<std::uint8_t> first(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) first[static_cast<std::size_t>(v)] = in_h[static_cast<std::size_t>(v)] ? 0 : 1;
    trace.cover.colorings.emplace_back(std::move(first));
    trace.levels.push_back("level 0: hitting set 0, rest 1");

    const int x = ceil_log2(static_cast<std::uint64_t>(std::max(groups, 1)));
    for (int i = 0; i < x; ++i) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.n()), 1);
        for (std::size_t pos = 0; pos < hitting.size(); ++pos)
            bits[static_cast<std::size_t>(hitting[pos])] =
                static_cast<std::uint8_t>(((static_cast<int>(pos) / (k - 1)) >> i) & 1);
        trace.cover.colorings.emplace_back(std::move(bits));
        trace.levels.push_back("group bit " + std::to_string(i) + " over the hitting set");
    }
    return trace;
}

} // namespace bicover

#endif // BICOVER_CONSTRUCTIONS_HPP
