#ifndef BICOVER_HYPERGRAPH_HPP
#define BICOVER_HYPERGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bicover/bits.hpp"
#include "bicover/errors.hpp"

namespace bicover {

using Edge = std::vector<int>; // strictly increasing vertex ids

/// k-uniform hypergraph on vertices {0..n-1}.  Edges are stored sorted and
/// deduplicated (canonical form); the type is immutable after construction.
class Hypergraph {
public:
    /// Canonicalizes and validates.  Input edges may be unsorted and may
    /// contain duplicates; duplicates are dropped and counted through
    /// *duplicates_removed when given.
    static Hypergraph make(int n, int k, std::vector<Edge> edges,
                           int* duplicates_removed = nullptr) {
        if (n < 1) throw InvalidInput("vertex count must be positive");
        if (k < 2 || k > n)
            throw InvalidInput("uniformity k=" + std::to_string(k) +
                               " outside [2, n=" + std::to_string(n) + "]");
        for (auto& e : edges) {
            if (static_cast<int>(e.size()) != k)
                throw InvalidInput("edge of size " + std::to_string(e.size()) +
                                   " in a " + std::to_string(k) + "-uniform hypergraph");
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw InvalidInput("edge with repeated vertex");
            if (e.front() < 0 || e.back() >= n)
                throw InvalidInput("edge vertex out of range [0, " + std::to_string(n) + ")");
        }
        std::sort(edges.begin(), edges.end());
        const auto before = edges.size();
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        if (duplicates_removed)
            *duplicates_removed = static_cast<int>(before - edges.size());
        return Hypergraph(n, k, std::move(edges));
    }

    int n() const { return n_; }
    int k() const { return k_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    /// One bitset of n bits per edge (vertex membership), for overlap tests.
    std::vector<EdgeBitset> vertex_masks() const {
        std::vector<EdgeBitset> vm;
        vm.reserve(edges_.size());
        for (const auto& e : edges_) {
            EdgeBitset b(n_);
            for (int v : e) b.set(v);
            vm.push_back(std::move(b));
        }
        return vm;
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(static_cast<std::size_t>(n_), 0);
        for (const auto& e : edges_)
            for (int v : e) ++deg[static_cast<std::size_t>(v)];
        return deg;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    Hypergraph(int n, int k, std::vector<Edge> edges)
        : n_(n), k_(k), edges_(std::move(edges)) {}

    int n_;
    int k_;
    std::vector<Edge> edges_;
};

/// Maximum, over edges e, of the number of other edges sharing a vertex
/// with e.  0 when the hypergraph has at most one edge.
inline int dependency(const Hypergraph& g) {
    const int m = g.m();
    if (m <= 1) return 0;
    const auto vm = g.vertex_masks();
    int best = 0;
    for (int a = 0; a < m; ++a) {
        int d = 0;
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            if ((vm[static_cast<std::size_t>(a)] & vm[static_cast<std::size_t>(b)]).any()) ++d;
        }
        best = std::max(best, d);
    }
    return best;
}

/// Greedy maximal matching: scan edges in canonical order, take each edge
/// disjoint from those already taken.
inline std::vector<Edge> greedy_maximal_matching(const Hypergraph& g) {
    std::vector<Edge> matching;
    EdgeBitset used(g.n());
    for (const auto& e : g.edges()) {
        bool free = true;
        for (int v : e)
            if (used.test(v)) { free = false; break; }
        if (free) {
            for (int v : e) used.set(v);
            matching.push_back(e);
        }
    }
    return matching;
}

/// Greedy hitting set: repeatedly take the vertex of maximum degree among
/// the still-unhit edges, ties broken by smallest id.
inline std::vector<int> greedy_hitting_set(const Hypergraph& g) {
    std::vector<int> hit;
    std::vector<bool> edge_done(static_cast<std::size_t>(g.m()), false);
    int remaining = g.m();
    while (remaining > 0) {
        std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
        for (int e = 0; e < g.m(); ++e) {
            if (edge_done[static_cast<std::size_t>(e)]) continue;
            for (int v : g.edge(e)) ++deg[static_cast<std::size_t>(v)];
        }
        int pick = 0;
        for (int v = 1; v < g.n(); ++v)
            if (deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pick)]) pick = v;
        hit.push_back(pick);
        for (int e = 0; e < g.m(); ++e) {
            if (edge_done[static_cast<std::size_t>(e)]) continue;
            const auto& ed = g.edge(e);
            if (std::binary_search(ed.begin(), ed.end(), pick)) {
                edge_done[static_cast<std::size_t>(e)] = true;
                --remaining;
            }
        }
    }
    std::sort(hit.begin(), hit.end());
    return hit;
}

} // namespace bicover

#endif // BICOVER_HYPERGRAPH_HPP
