#ifndef BICOVER_COVER_HPP
#define BICOVER_COVER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bicover/bits.hpp"
#include "bicover/errors.hpp"
#include "bicover/hypergraph.hpp"

namespace bicover {

/// One bit per vertex; bit b means color b.
struct Bicoloring {
    std::vector<std::uint8_t> bits;

    Bicoloring() = default;
    explicit Bicoloring(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    /// Bicoloring of n vertices from the low n bits of a pattern word
    /// (bit v = color of vertex v).
    static Bicoloring from_pattern(int n, std::uint64_t pattern) {
        std::vector<std::uint8_t> b(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) b[static_cast<std::size_t>(v)] = (pattern >> v) & 1;
        return Bicoloring(std::move(b));
    }

    int size() const { return static_cast<int>(bits.size()); }
    int bit(int v) const { return bits[static_cast<std::size_t>(v)]; }

    std::string to_string() const {
        std::string s;
        s.reserve(bits.size());
        for (auto b : bits) s.push_back(b ? '1' : '0');
        return s;
    }

    friend bool operator==(const Bicoloring& a, const Bicoloring& b) { return a.bits == b.bits; }
    friend bool operator<(const Bicoloring& a, const Bicoloring& b) { return a.bits < b.bits; }
};

/// Ordered sequence of bicolorings, possibly empty.
struct Cover {
    std::vector<Bicoloring> colorings;

    int size() const { return static_cast<int>(colorings.size()); }

    /// Common vertex count; -1 for an empty cover.
    int n() const { return colorings.empty() ? -1 : colorings.front().size(); }

    friend bool operator==(const Cover& a, const Cover& b) { return a.colorings == b.colorings; }
};

/// witness[e] = index of a bicoloring splitting edge e (smallest such), or
/// -1 when edge e is monochromatic in every bicoloring of the cover.
struct CoverCertificate {
    bool valid = false;
    std::vector<int> witness;
};

using ColorBitVector = std::vector<std::uint8_t>; // bit j = color in j-th bicoloring

/// Vertices grouped by identical color bit vectors, parts ordered by
/// smallest member.
struct CanonicalPartition {
    std::vector<std::vector<int>> parts;
    std::vector<ColorBitVector> vectors; // one per part
    bool cover_valid = false;            // partitions of non-covers are allowed but flagged

    int max_part_size() const {
        std::size_t best = 0;
        for (const auto& p : parts) best = std::max(best, p.size());
        return static_cast<int>(best);
    }
};

/// Weak proper coloring: no edge has all k vertices of equal color.
struct ProperColoring {
    std::vector<int> colors;
    int palette_size = 0; // number of distinct colors used

    static ProperColoring of(std::vector<int> colors) {
        ProperColoring p;
        std::vector<int> u(colors);
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        p.palette_size = static_cast<int>(u.size());
        p.colors = std::move(colors);
        return p;
    }
};

inline void check_dimensions(const Hypergraph& g, const Cover& c) {
    for (const auto& x : c.colorings)
        if (x.size() != g.n())
            throw DimensionError("bicoloring of length " + std::to_string(x.size()) +
                                 " applied to hypergraph with n=" + std::to_string(g.n()));
}

/// Bit e set iff edge e is monochromatic under x.  A cover is valid iff the
/// AND of its bicolorings' masks is all-zero.
inline EdgeBitset uncovered_mask(const Hypergraph& g, const Bicoloring& x) {
    if (x.size() != g.n())
        throw DimensionError("bicoloring of length " + std::to_string(x.size()) +
                             " applied to hypergraph with n=" + std::to_string(g.n()));
    EdgeBitset mask(g.m());
    for (int e = 0; e < g.m(); ++e) {
        const auto& ed = g.edge(e);
        const int c0 = x.bit(ed[0]);
        bool mono = true;
        for (std::size_t i = 1; i < ed.size(); ++i)
            if (x.bit(ed[i]) != c0) { mono = false; break; }
        if (mono) mask.set(e);
    }
    return mask;
}

/// Certificate per edge: the smallest index of a bicoloring in c under
/// which that edge is non-monochromatic.
inline CoverCertificate verify_cover(const Hypergraph& g, const Cover& c) {
    check_dimensions(g, c);
    CoverCertificate cert;
    cert.witness.assign(static_cast<std::size_t>(g.m()), -1);
    cert.valid = true;
    for (int e = 0; e < g.m(); ++e) {
        const auto& ed = g.edge(e);
        int w = -1;
        for (int j = 0; j < c.size(); ++j) {
            const auto& x = c.colorings[static_cast<std::size_t>(j)];
            const int c0 = x.bit(ed[0]);
            for (std::size_t i = 1; i < ed.size(); ++i) {
                if (x.bit(ed[i]) != c0) { w = j; break; }
            }
            if (w >= 0) break;
        }
        cert.witness[static_cast<std::size_t>(e)] = w;
        if (w < 0) cert.valid = false;
    }
    return cert;
}

inline ColorBitVector color_bit_vector(const Cover& c, int v) {
    ColorBitVector vec(static_cast<std::size_t>(c.size()));
    for (int j = 0; j < c.size(); ++j)
        vec[static_cast<std::size_t>(j)] =
            static_cast<std::uint8_t>(c.colorings[static_cast<std::size_t>(j)].bit(v));
    return vec;
}

/// Groups vertices by identical color bit vectors.  Works for non-covers
/// too; the certificate result is recorded in cover_valid.
inline CanonicalPartition canonical_partition(const Hypergraph& g, const Cover& c) {
    check_dimensions(g, c);
    CanonicalPartition part;
    part.cover_valid = verify_cover(g, c).valid;
    std::map<ColorBitVector, std::vector<int>> groups;
    for (int v = 0; v < g.n(); ++v) groups[color_bit_vector(c, v)].push_back(v);
    std::vector<std::pair<int, const ColorBitVector*>> order;
    order.reserve(groups.size());
    for (const auto& [vec, vs] : groups) order.emplace_back(vs.front(), &vec);
    std::sort(order.begin(), order.end());
    for (const auto& [mn, vec] : order) {
        part.parts.push_back(groups[*vec]);
        part.vectors.push_back(*vec);
    }
    return part;
}

/// Colors each vertex with the integer whose binary digit j is the vertex's
/// color in the j-th bicoloring.  Requires a valid cover; the result is a
/// proper coloring on at most 2^|c| colors.
inline ProperColoring coloring_from_cover(const Hypergraph& g, const Cover& c) {
    check_dimensions(g, c);
    if (!verify_cover(g, c).valid)
        throw InvalidInput("cover is not valid for this hypergraph; an uncovered edge "
                           "would become monochromatic under the induced coloring");
    std::vector<int> colors(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        int col = 0;
        for (int j = 0; j < c.size(); ++j)
            col |= c.colorings[static_cast<std::size_t>(j)].bit(v) << j;
        colors[static_cast<std::size_t>(v)] = col;
    }
    return ProperColoring::of(std::move(colors));
}

inline bool is_proper(const Hypergraph& g, const ProperColoring& p) {
    if (static_cast<int>(p.colors.size()) != g.n()) return false;
    for (const auto& ed : g.edges()) {
        const int c0 = p.colors[static_cast<std::size_t>(ed[0])];
        bool mono = true;
        for (std::size_t i = 1; i < ed.size(); ++i)
            if (p.colors[static_cast<std::size_t>(ed[i])] != c0) { mono = false; break; }
        if (mono) return false;
    }
    return true;
}

/// Cover of exactly ceil(log2(palette)) bicolorings from a proper coloring:
/// bicoloring i assigns each vertex bit i of its rank-compressed color.
inline Cover cover_from_coloring(const Hypergraph& g, const ProperColoring& p) {
    if (static_cast<int>(p.colors.size()) != g.n())
        throw DimensionError("coloring of length " + std::to_string(p.colors.size()) +
                             " applied to hypergraph with n=" + std::to_string(g.n()));
    if (!is_proper(g, p))
        throw InvalidInput("input coloring is not proper: some edge is monochromatic");
    std::vector<int> palette(p.colors);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    const int u = static_cast<int>(palette.size());
    const int x = ceil_log2(static_cast<std::uint64_t>(u));
    Cover c;
    c.colorings.reserve(static_cast<std::size_t>(x));
    std::vector<int> rank(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        rank[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(palette.begin(), palette.end(),
                             p.colors[static_cast<std::size_t>(v)]) - palette.begin());
    for (int i = 0; i < x; ++i) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v)
            bits[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>((rank[static_cast<std::size_t>(v)] >> i) & 1);
        c.colorings.emplace_back(std::move(bits));
    }
    return c;
}

} // namespace bicover

#endif // BICOVER_COVER_HPP
