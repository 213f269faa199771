#ifndef BICOVER_APPROXIMATION_HPP
#define BICOVER_APPROXIMATION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicover/bits.hpp"
#include "bicover/cover.hpp"
#include "bicover/errors.hpp"
#include "bicover/hypergraph.hpp"
#include "bicover/random_bits.hpp"

namespace bicover {

/// Sequential greedy: each vertex takes the smallest color that keeps every
/// edge whose other vertices are already colored non-monochromatic.  Proper
/// by construction; the palette is unbounded.
inline ProperColoring greedy_proper_coloring(const Hypergraph& g,
                                             const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n())
        throw InvalidInput("greedy_proper_coloring: order must list every vertex once");
    std::vector<std::vector<int>> edges_of(static_cast<std::size_t>(g.n()));
    for (int e = 0; e < g.m(); ++e)
        for (int v : g.edge(e)) edges_of[static_cast<std::size_t>(v)].push_back(e);
    std::vector<int> colors(static_cast<std::size_t>(g.n()), -1);
    for (int v : order) {
        std::vector<std::uint8_t> forbidden(static_cast<std::size_t>(g.n()) + 1, 0);
        for (int e : edges_of[static_cast<std::size_t>(v)]) {
            int common = -2; // common color of the other vertices, -1 if any uncolored
            for (int u : g.edge(e)) {
                if (u == v) continue;
                const int cu = colors[static_cast<std::size_t>(u)];
                if (cu < 0) { common = -1; break; }
                if (common == -2) common = cu;
                else if (common != cu) { common = -1; break; }
            }
            if (common >= 0) forbidden[static_cast<std::size_t>(common)] = 1;
        }
        int c = 0;
        while (forbidden[static_cast<std::size_t>(c)]) ++c;
        colors[static_cast<std::size_t>(v)] = c;
    }
    return ProperColoring::of(std::move(colors));
}

namespace detail {

inline std::vector<int> natural_order(int n) {
    std::vector<int> o(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) o[static_cast<std::size_t>(i)] = i;
    return o;
}

/// Repeatedly strip a maximal independent set; one color per round.
inline ProperColoring peel_independent_sets(const Hypergraph& g) {
    const int n = g.n();
    const int k = g.k();
    std::vector<std::vector<int>> edges_of(static_cast<std::size_t>(n));
    for (int e = 0; e < g.m(); ++e)
        for (int v : g.edge(e)) edges_of[static_cast<std::size_t>(v)].push_back(e);
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    int round = 0;
    int remaining = n;
    while (remaining > 0) {
        std::vector<int> in_round_count(static_cast<std::size_t>(g.m()), 0);
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] >= 0) continue;
            bool ok = true;
            for (int e : edges_of[static_cast<std::size_t>(v)]) {
                if (in_round_count[static_cast<std::size_t>(e)] == k - 1) { ok = false; break; }
            }
            if (!ok) continue;
            colors[static_cast<std::size_t>(v)] = round;
            --remaining;
            for (int e : edges_of[static_cast<std::size_t>(v)]) ++in_round_count[static_cast<std::size_t>(e)];
        }
        ++round;
    }
    return ProperColoring::of(std::move(colors));
}

/// Backtracking colorer with a palette limit and a node budget; returns
/// nothing when the budget runs out or no coloring exists within the
/// palette.
inline std::optional<ProperColoring> bounded_backtracking_coloring(
    const Hypergraph& g, int palette, std::uint64_t node_budget) {
    const int n = g.n();
    const auto deg = g.degrees();
    std::vector<int> order = natural_order(n);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    auto ok = [&](int v, int col) {
        for (const auto& e : g.edges()) {
            if (!std::binary_search(e.begin(), e.end(), v)) continue;
            bool mono = true;
            for (int u : e) {
                if (u == v) continue;
                if (colors[static_cast<std::size_t>(u)] != col) { mono = false; break; }
            }
            if (mono) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, int idx, int max_used) -> bool {
        if (out_of_budget) return false;
        if (++nodes > node_budget) { out_of_budget = true; return false; }
        if (idx == n) return true;
        const int v = order[static_cast<std::size_t>(idx)];
        const int top = std::min(max_used, palette - 1);
        for (int col = 0; col <= top; ++col) {
            if (!ok(v, col)) continue;
            colors[static_cast<std::size_t>(v)] = col;
            if (self(self, idx + 1, std::max(max_used, col + 1))) return true;
            colors[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0, 0)) return std::nullopt;
    return ProperColoring::of(std::move(colors));
}

/// Groups of k-1 consecutive vertices; always proper, uses ceil(n/(k-1))
/// colors.  This is the sweep's fallback ceiling.
inline ProperColoring group_coloring(const Hypergraph& g) {
    std::vector<int> colors(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) colors[static_cast<std::size_t>(v)] = v / (g.k() - 1);
    return ProperColoring::of(std::move(colors));
}

} // namespace detail

/// One sweep attempt: heuristic name, palette budget 2^s, outcome.
struct SweepAttempt {
    int s = 0;
    std::string heuristic;
    bool success = false;
    int colors_used = 0;
    int cover_size = 0; // ceil(log2 colors_used) when successful
};

struct SweepReport {
    std::vector<SweepAttempt> attempts;
    int chosen_s = 0;
    std::string chosen_heuristic;
    int colors_used = 0;
    Cover cover;
    int cover_size() const { return cover.size(); }
};

/// Sweeps palette budgets 2^s for s = 1..ceil(log2 ceil(n/(k-1))), runs the
/// heuristic portfolio at each budget, and converts the best success into a
/// cover.  The group-partition member always succeeds at the top budget, so
/// the result never exceeds ceil(log2 ceil(n/(k-1))) bicolorings.
inline SweepReport cover_via_coloring_sweep(const Hypergraph& g,
                                            std::uint64_t backtrack_node_budget = 1 << 18) {
    const int n = g.n();
    const int k = g.k();
    SweepReport rep;
    if (g.m() == 0) {
        rep.chosen_s = 0;
        rep.chosen_heuristic = "edgeless";
        rep.colors_used = 1;
        return rep; // empty cover is valid for an edgeless hypergraph
    }

    const int s_max = std::max(1, ceil_log2_ratio(static_cast<std::uint64_t>(n),
                                                  static_cast<std::uint64_t>(k - 1)));

    // portfolio colorings are palette-free; compute them once
    struct Member {
        std::string name;
        ProperColoring coloring;
    };
    std::vector<Member> members;
    members.push_back({"greedy-natural", greedy_proper_coloring(g, detail::natural_order(n))});
    {
        auto o = detail::natural_order(n);
        std::reverse(o.begin(), o.end());
        members.push_back({"greedy-reverse", greedy_proper_coloring(g, o)});
    }
    {
        auto o = detail::natural_order(n);
        const auto deg = g.degrees();
        std::stable_sort(o.begin(), o.end(), [&](int a, int b) {
            return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
        });
        members.push_back({"greedy-maxdeg", greedy_proper_coloring(g, o)});
    }
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto o = detail::natural_order(n);
        SplitMix64 rng(seed);
        for (int i = n - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
            std::swap(o[static_cast<std::size_t>(i)], o[static_cast<std::size_t>(j)]);
        }
        members.push_back({"greedy-shuffle" + std::to_string(seed), greedy_proper_coloring(g, o)});
    }
    members.push_back({"is-peeling", detail::peel_independent_sets(g)});
    members.push_back({"group-partition", detail::group_coloring(g)});

    bool have_best = false;
    Cover best_cover;
    int best_cover_size = 0, best_s = 0, best_colors = 0;
    std::string best_name;

    auto cover_less = [](const Cover& a, const Cover& b) {
        return a.colorings < b.colorings;
    };

    auto offer = [&](int s, const std::string& name, const ProperColoring& pc) {
        SweepAttempt at;
        at.s = s;
        at.heuristic = name;
        at.success = pc.palette_size <= (1 << s);
        at.colors_used = pc.palette_size;
        if (at.success) {
            at.cover_size = ceil_log2(static_cast<std::uint64_t>(pc.palette_size));
            Cover cand = cover_from_coloring(g, pc);
            const bool better =
                !have_best || at.cover_size < best_cover_size ||
                (at.cover_size == best_cover_size &&
                 (s < best_s || (s == best_s && cover_less(cand, best_cover))));
            if (better) {
                have_best = true;
                best_cover = std::move(cand);
                best_cover_size = at.cover_size;
                best_s = s;
                best_colors = pc.palette_size;
                best_name = name;
            }
        }
        rep.attempts.push_back(std::move(at));
    };

    for (int s = 1; s <= s_max; ++s) {
        for (const auto& mbr : members) offer(s, mbr.name, mbr.coloring);
        // budgeted exact search is the only palette-aware member
        if (auto bt = detail::bounded_backtracking_coloring(g, 1 << s, backtrack_node_budget)) {
            const std::string name = "backtracking-s" + std::to_string(s);
            offer(s, name, *bt);
            members.push_back({name, std::move(*bt)});
        }
    }

    rep.chosen_s = best_s;
    rep.chosen_heuristic = best_name;
    rep.colors_used = best_colors;
    rep.cover = std::move(best_cover);
    return rep;
}

} // namespace bicover

#endif // BICOVER_APPROXIMATION_HPP
