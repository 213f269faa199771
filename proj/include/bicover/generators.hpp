#ifndef BICOVER_GENERATORS_HPP
#define BICOVER_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bicover/bits.hpp"
#include "bicover/errors.hpp"
#include "bicover/hypergraph.hpp"
#include "bicover/oracles.hpp"
#include "bicover/random_bits.hpp"

namespace bicover {

inline Hypergraph gen_complete(int n, int k, std::uint64_t budget = std::uint64_t{1} << 22) {
    if (k < 2 || k > n)
        throw InvalidInput("gen_complete: need 2 <= k <= n");
    if (binomial(n, k) > budget)
        throw CapExceeded("gen_complete: C(n,k) exceeds edge budget");
    std::vector<Edge> edges;
    std::vector<int> c = first_combination(k);
    do {
        edges.push_back(c);
    } while (next_combination(c, n));
    return Hypergraph::make(n, k, std::move(edges));
}

inline Hypergraph gen_odd_cycle(int n) {
    if (n < 3 || n % 2 == 0)
        throw InvalidInput("gen_odd_cycle: n must be odd and at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        int a = i, b = (i + 1) % n;
        if (a > b) std::swap(a, b);
        edges.push_back({a, b});
    }
    return Hypergraph::make(n, 2, std::move(edges));
}

/// Row/column family with a large alpha/gamma gap: q columns of p vertices,
/// k = p.  E1 = k-subsets of the first (p-1)q vertices, E2 = (k-1)-subsets
/// of those plus one tail vertex, minus the q in-column edges (so each
/// column is independent).
struct CoverFriendlyParams {
    int p = 0; // rows; also k
    int q = 0; // columns; a power of two greater than p

    void validate() const {
        if (p <= 2) throw InvalidInput("cover-friendly: p must exceed 2");
        if (q <= p) throw InvalidInput("cover-friendly: q must exceed p");
        if ((q & (q - 1)) != 0) throw InvalidInput("cover-friendly: q must be a power of two");
    }
};

inline Hypergraph gen_cover_friendly(const CoverFriendlyParams& params,
                                     std::uint64_t budget = std::uint64_t{1} << 22) {
    params.validate();
    const int p = params.p, q = params.q;
    const int n = p * q;
    const int k = p;
    const int v1 = n - q; // vertices 0..v1-1; tail v1..n-1
    if (binomial(v1, k) + binomial(v1, k - 1) * static_cast<std::uint64_t>(q) > budget)
        throw CapExceeded("gen_cover_friendly: edge count exceeds budget");

    std::set<Edge> edges;
    {
        std::vector<int> c = first_combination(k);
        do {
            edges.insert(c);
        } while (next_combination(c, v1));
    }
    {
        std::vector<int> c = first_combination(k - 1);
        do {
            for (int w = v1; w < n; ++w) {
                Edge e = c;
                e.push_back(w);
                edges.insert(std::move(e));
            }
        } while (next_combination(c, v1));
    }
    // remove the in-column edges: column of v is v mod q
    for (int r = 0; r < q; ++r) {
        Edge col;
        for (int v = r; v < n; v += q) col.push_back(v);
        // k-subsets of a p-element column, p == k: the column itself
        edges.erase(col);
    }
    return Hypergraph::make(n, k, std::vector<Edge>(edges.begin(), edges.end()));
}

/// The 12-vertex 3-uniform example with chi_c = 2, alpha = 5, gamma = 3,
/// built from its own set-builder description: all triples inside {0..7},
/// plus pairs from {0..7} joined with one of {8..11}, minus the four
/// diagonal triples {0,4,8},{1,5,9},{2,6,10},{3,7,11}.  Coincides
/// edge-for-edge with gen_cover_friendly({3,4}).
inline Hypergraph gen_g1() {
    std::vector<Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            for (int w = v + 1; w < 8; ++w) edges.push_back({u, v, w});
    const std::set<Edge> excluded = {{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}};
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            for (int w = 8; w < 12; ++w) {
                Edge e = {u, v, w};
                if (!excluded.count(e)) edges.push_back(std::move(e));
            }
    return Hypergraph::make(12, 3, std::move(edges));
}

inline Hypergraph gen_random_kuniform(int n, int k, double prob, std::uint64_t seed,
                                      std::uint64_t budget = std::uint64_t{1} << 22) {
    if (k < 2 || k > n) throw InvalidInput("gen_random_kuniform: need 2 <= k <= n");
    if (prob < 0.0 || prob > 1.0) throw InvalidInput("gen_random_kuniform: prob outside [0,1]");
    if (binomial(n, k) > budget)
        throw CapExceeded("gen_random_kuniform: C(n,k) exceeds budget");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    std::vector<int> c = first_combination(k);
    do {
        if (rng.next_unit() < prob) edges.push_back(c);
    } while (next_combination(c, n));
    return Hypergraph::make(n, k, std::move(edges));
}

/// Closed-form expectation calculator for the clique-gap construction.
struct CliqueGapReport {
    int k = 0, t = 0, n = 0;
    std::uint64_t seed = 0;
    double p = 0.0;                  // n^{-k/(k+1)}
    int edges_before = 0;
    int cliques_found = 0;           // complete (k+1)-subsets destroyed
    int vertices_deleted = 0;
    int edges_after = 0;
    int omega = 0;                   // verified clique number of the output
    bool omega_convention = false;
    int independent_set_found = 0;   // largest found within the alpha budget
    bool independent_set_exact = true;

    // expectation calculator (sampling-free)
    double expected_cliques = 0.0;       // C(n,k+1) p^{k+1} = C(n,k+1) / n^k
    double clique_bound = 0.0;           // n/(k+1)!
    bool expectation_inequality = false; // E[C_omega] < n/(k+1)!, checked in exact integers
    double expected_is_bound = 0.0;      // 2^n exp(-p (n/((k+1)2^t))^k)
    double n_threshold = 0.0;            // ((k+1)^k 2^{tk+1} ln 2)^{(k+1)/k^2}
};

/// Samples G_{n,p} with p = n^{-k/(k+1)}, destroys every complete
/// (k+1)-subset by deleting its smallest surviving vertex, and certifies
/// omega = k on the result.  The independent-set guarantee of this
/// construction is existential and kicks in only at astronomically large n,
/// so at desk scale alpha is reported, not asserted.
inline std::pair<Hypergraph, CliqueGapReport> gen_clique_gap(
    int k, int t, int n, std::uint64_t seed,
    std::uint64_t budget = std::uint64_t{1} << 22, const OracleCaps& caps = {}) {
    if (k < 2 || n < k + 1) throw InvalidInput("gen_clique_gap: need k >= 2 and n > k");
    if (t < 1) throw InvalidInput("gen_clique_gap: need t >= 1");
    if (binomial(n, k + 1) > budget)
        throw CapExceeded("gen_clique_gap: C(n,k+1) exceeds budget");

    CliqueGapReport rep;
    rep.k = k;
    rep.t = t;
    rep.n = n;
    rep.seed = seed;
    rep.p = std::pow(static_cast<double>(n), -static_cast<double>(k) / (k + 1));

    Hypergraph g = gen_random_kuniform(n, k, rep.p, seed, budget);
    rep.edges_before = g.m();

    std::set<Edge> live(g.edges().begin(), g.edges().end());
    std::vector<std::uint8_t> deleted(static_cast<std::size_t>(n), 0);
    std::vector<int> sub = first_combination(k + 1);
    do {
        bool any_deleted = false;
        for (int v : sub)
            if (deleted[static_cast<std::size_t>(v)]) { any_deleted = true; break; }
        if (any_deleted) continue;
        // complete iff all k-subsets are still edges
        bool complete = true;
        std::vector<int> idx = first_combination(k);
        do {
            Edge e(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = sub[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (!live.count(e)) { complete = false; break; }
        } while (next_combination(idx, k + 1));
        if (!complete) continue;
        ++rep.cliques_found;
        const int victim = sub[0]; // smallest id
        deleted[static_cast<std::size_t>(victim)] = 1;
        ++rep.vertices_deleted;
        for (auto it = live.begin(); it != live.end();) {
            if (std::binary_search(it->begin(), it->end(), victim))
                it = live.erase(it);
            else
                ++it;
        }
    } while (next_combination(sub, n));

    Hypergraph out = Hypergraph::make(n, k, std::vector<Edge>(live.begin(), live.end()));
    rep.edges_after = out.m();

    auto om = exact_omega(out, caps);
    rep.omega = om.omega;
    rep.omega_convention = om.convention;
    auto al = exact_alpha(out, caps);
    rep.independent_set_found = al.alpha;
    rep.independent_set_exact = al.exact;

    // E[C_omega] = C(n,k+1) p^{k+1} with p = n^{-k/(k+1)}, so exactly
    // C(n,k+1)/n^k; the inequality against n/(k+1)! reduces to
    // C(n,k+1) (k+1)! < n^{k+1}, checked in integers.
    rep.expected_cliques = static_cast<double>(binomial(n, k + 1)) /
                           std::pow(static_cast<double>(n), k);
    double fact = 1.0;
    for (int i = 2; i <= k + 1; ++i) fact *= i;
    rep.clique_bound = static_cast<double>(n) / fact;
    {
        unsigned __int128 lhs = binomial(n, k + 1);
        for (int i = 2; i <= k + 1; ++i) lhs *= static_cast<unsigned>(i);
        unsigned __int128 rhs = 1;
        for (int i = 0; i < k + 1; ++i) rhs *= static_cast<unsigned>(n);
        rep.expectation_inequality = lhs < rhs;
    }
    rep.expected_is_bound =
        std::pow(2.0, n) *
        std::exp(-rep.p * std::pow(static_cast<double>(n) / ((k + 1) * std::pow(2.0, t)),
                                   static_cast<double>(k)));
    rep.n_threshold = std::pow(std::pow(static_cast<double>(k + 1), k) *
                                   std::pow(2.0, t * k + 1) * std::log(2.0),
                               static_cast<double>(k + 1) / (k * k));
    return {std::move(out), rep};
}

} // namespace bicover

#endif // BICOVER_GENERATORS_HPP
