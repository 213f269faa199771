#ifndef BICOVER_ORACLES_HPP
#define BICOVER_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bicover/bits.hpp"
#include "bicover/cover.hpp"
#include "bicover/errors.hpp"
#include "bicover/hypergraph.hpp"

namespace bicover {

/// Resource caps for the exhaustive oracles.
struct OracleCaps {
    int n_cap = 14;                         // vertex cap for 2^n bicoloring sweeps
    int x_cap = 3;                          // gamma enumerates covers of size chi_c <= x_cap
    std::uint64_t gamma_tuple_budget = std::uint64_t{1} << 28;
    int alpha_n_cap = 30;
    std::uint64_t alpha_node_budget = std::uint64_t{1} << 26;
    int omega_n_cap = 40;
};

namespace detail {

/// Monochromatic-edge masks for all 2^n bicolorings of one hypergraph,
/// stored once for the complement representatives (bit n-1 clear): a
/// bicoloring and its complement have identical masks.
class MaskTable {
public:
    explicit MaskTable(const Hypergraph& g)
        : n_(g.n()), m_(g.m()), words_((g.m() + 63) / 64) {
        const std::uint32_t reps = n_ >= 1 ? (std::uint32_t{1} << (n_ - 1)) : 1;
        std::vector<std::uint32_t> vmask(static_cast<std::size_t>(m_), 0);
        for (int e = 0; e < m_; ++e)
            for (int v : g.edge(e)) vmask[static_cast<std::size_t>(e)] |= std::uint32_t{1} << v;
        buf_.assign(static_cast<std::size_t>(reps) * static_cast<std::size_t>(words_), 0);
        for (std::uint32_t p = 0; p < reps; ++p) {
            std::uint64_t* row = buf_.data() + static_cast<std::size_t>(p) * words_;
            for (int e = 0; e < m_; ++e) {
                const std::uint32_t ve = vmask[static_cast<std::size_t>(e)];
                const std::uint32_t t = p & ve;
                if (t == 0 || t == ve) row[e >> 6] |= std::uint64_t{1} << (e & 63);
            }
        }
    }

    int n() const { return n_; }
    int m() const { return m_; }
    int words() const { return words_; }
    std::uint32_t full_pattern() const {
        return n_ >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
    }

    std::uint32_t representative(std::uint32_t pattern) const {
        if (n_ >= 1 && ((pattern >> (n_ - 1)) & 1)) return ~pattern & full_pattern();
        return pattern;
    }

    const std::uint64_t* mask(std::uint32_t pattern) const {
        return buf_.data() + static_cast<std::size_t>(representative(pattern)) * words_;
    }

private:
    int n_;
    int m_;
    int words_;
    std::vector<std::uint64_t> buf_;
};

inline bool all_zero(const std::uint64_t* w, int words) {
    for (int i = 0; i < words; ++i)
        if (w[i]) return false;
    return true;
}

struct StateHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
        return h;
    }
};

/// Depth-bounded exact set cover over precomputed edge masks.  State is the
/// AND of the chosen masks (still-uncovered edges); branching targets the
/// uncovered edge with the fewest covering candidates.
class CoverSearch {
public:
    CoverSearch(const MaskTable& table, int limit_cap)
        : table_(table), words_(table.words()) {
        (void)limit_cap;
        const std::uint32_t reps = table_.n() >= 1 ? (std::uint32_t{1} << (table_.n() - 1)) : 1;
        std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, StateHash> seen;
        seen.reserve(reps * 2);
        for (std::uint32_t p = 0; p < reps; ++p) {
            std::vector<std::uint64_t> key(table_.mask(p), table_.mask(p) + words_);
            if (seen.emplace(std::move(key), p).second) candidates_.push_back(p);
        }
        // candidates_ is sorted by pattern already (insertion in pattern order)
        edge_cands_.resize(static_cast<std::size_t>(table_.m()));
        for (std::size_t ci = 0; ci < candidates_.size(); ++ci) {
            const std::uint64_t* mk = table_.mask(candidates_[ci]);
            for (int e = 0; e < table_.m(); ++e)
                if (!((mk[e >> 6] >> (e & 63)) & 1))
                    edge_cands_[static_cast<std::size_t>(e)].push_back(static_cast<std::uint32_t>(ci));
        }
        // per-edge bitsets over candidate indices, for the last-pick fast path
        cand_words_ = static_cast<int>((candidates_.size() + 63) / 64);
        edge_cand_bits_.assign(static_cast<std::size_t>(table_.m()) *
                                   static_cast<std::size_t>(cand_words_),
                               0);
        for (int e = 0; e < table_.m(); ++e)
            for (std::uint32_t ci : edge_cands_[static_cast<std::size_t>(e)])
                edge_cand_bits_[static_cast<std::size_t>(e) * cand_words_ + (ci >> 6)] |=
                    std::uint64_t{1} << (ci & 63);
    }

    /// Looks for a cover of at most `x` bicolorings; fills `chosen` with the
    /// candidate patterns on success.
    bool find(int x, std::vector<std::uint32_t>& chosen) {
        chosen.clear();
        std::vector<std::uint64_t> state(static_cast<std::size_t>(words_), ~std::uint64_t{0});
        if (table_.m() % 64)
            state.back() = (std::uint64_t{1} << (table_.m() % 64)) - 1;
        failed_.clear();
        return dfs(state, x, chosen);
    }

    std::size_t candidate_count() const { return candidates_.size(); }

private:
    bool dfs(const std::vector<std::uint64_t>& state, int remaining,
             std::vector<std::uint32_t>& chosen) {
        if (all_zero(state.data(), words_)) return true;
        if (remaining == 0) return false;
        auto it = failed_.find(state);
        if (it != failed_.end() && it->second >= remaining) return false;

        if (remaining == 1) {
            // one pick left: intersect the candidate sets of every uncovered
            // edge, keeping only the still-nonzero words live
            int first_e = -1;
            for (int e = 0; e < table_.m(); ++e)
                if ((state[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1) { first_e = e; break; }
            const std::uint64_t* row0 =
                edge_cand_bits_.data() + static_cast<std::size_t>(first_e) * cand_words_;
            acc_.assign(row0, row0 + cand_words_);
            live_.clear();
            for (int w = 0; w < cand_words_; ++w)
                if (acc_[static_cast<std::size_t>(w)]) live_.push_back(w);
            for (int e = first_e + 1; e < table_.m() && !live_.empty(); ++e) {
                if (!((state[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1)) continue;
                const std::uint64_t* row =
                    edge_cand_bits_.data() + static_cast<std::size_t>(e) * cand_words_;
                std::size_t out = 0;
                for (int w : live_) {
                    acc_[static_cast<std::size_t>(w)] &= row[w];
                    if (acc_[static_cast<std::size_t>(w)]) live_[out++] = w;
                }
                live_.resize(out);
            }
            if (!live_.empty()) {
                const int w = live_.front();
                const int ci = w * 64 + std::countr_zero(acc_[static_cast<std::size_t>(w)]);
                chosen.push_back(candidates_[static_cast<std::size_t>(ci)]);
                return true;
            }
            return false; // cheap to recompute; not worth a memo entry
        }

        // branch on the uncovered edge with the fewest candidates
        int best_e = -1;
        std::size_t best_c = 0;
        for (int e = 0; e < table_.m(); ++e) {
            if (!((state[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1)) continue;
            const std::size_t c = edge_cands_[static_cast<std::size_t>(e)].size();
            if (best_e < 0 || c < best_c) { best_e = e; best_c = c; }
        }
        std::vector<std::uint64_t> next(static_cast<std::size_t>(words_));
        for (std::uint32_t ci : edge_cands_[static_cast<std::size_t>(best_e)]) {
            const std::uint64_t* mk = table_.mask(candidates_[ci]);
            for (int w = 0; w < words_; ++w) next[static_cast<std::size_t>(w)] = state[static_cast<std::size_t>(w)] & mk[w];
            chosen.push_back(candidates_[ci]);
            if (dfs(next, remaining - 1, chosen)) return true;
            chosen.pop_back();
        }
        if (failed_.size() < kMemoLimit) {
            auto& slot = failed_[state];
            slot = std::max(slot, remaining);
        }
        return false;
    }

    static constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

    const MaskTable& table_;
    int words_;
    int cand_words_ = 0;
    std::vector<std::uint32_t> candidates_;
    std::vector<std::vector<std::uint32_t>> edge_cands_;
    std::vector<std::uint64_t> edge_cand_bits_;
    std::vector<std::uint64_t> acc_;
    std::vector<int> live_;
    std::unordered_map<std::vector<std::uint64_t>, int, StateHash> failed_;
};

} // namespace detail

struct ChiCResult {
    int chi_c = 0;            // meaningful when !exceeded_limit
    bool exceeded_limit = false;
    int limit = 0;
    Cover witness;
};

/// Exact bicoloring cover number by exhaustive search over bicoloring
/// tuples.  Masks for all 2^n bicolorings are precomputed once; complement
/// symmetry halves the base set.
inline ChiCResult exact_chi_c(const Hypergraph& g, int limit = -1,
                              const OracleCaps& caps = {}) {
    if (g.n() > caps.n_cap)
        throw CapExceeded("exact_chi_c: n=" + std::to_string(g.n()) + " exceeds cap " +
                          std::to_string(caps.n_cap));
    if (limit < 0) limit = ceil_log2_ratio(static_cast<std::uint64_t>(g.n()),
                                           static_cast<std::uint64_t>(g.k() - 1));
    ChiCResult r;
    r.limit = limit;
    if (g.m() == 0) {
        r.chi_c = 0;
        return r;
    }
    detail::MaskTable table(g);
    detail::CoverSearch search(table, limit);
    std::vector<std::uint32_t> chosen;
    for (int x = 1; x <= limit; ++x) {
        if (search.find(x, chosen)) {
            r.chi_c = x;
            for (std::uint32_t p : chosen)
                r.witness.colorings.push_back(Bicoloring::from_pattern(g.n(), p));
            return r;
        }
    }
    r.exceeded_limit = true;
    return r;
}

struct ChromaticResult {
    int chi = 0;
    ProperColoring witness;
};

namespace detail {

class ChromaticSearch {
public:
    explicit ChromaticSearch(const Hypergraph& g) : g_(g) {
        // static order: degree descending, ties by id
        const auto deg = g.degrees();
        order_.resize(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
        });
    }

    bool feasible(int c, std::vector<int>& out) {
        colors_.assign(static_cast<std::size_t>(g_.n()), -1);
        if (dfs(0, 0, c)) {
            out = colors_;
            return true;
        }
        return false;
    }

private:
    bool dfs(int idx, int max_used, int c) {
        if (idx == g_.n()) return true;
        const int v = order_[static_cast<std::size_t>(idx)];
        const int top = std::min(max_used, c - 1); // may introduce color max_used (new) at most
        for (int col = 0; col <= top; ++col) {
            if (!ok(v, col)) continue;
            colors_[static_cast<std::size_t>(v)] = col;
            if (dfs(idx + 1, std::max(max_used, col + 1), c)) return true;
            colors_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    // v may take col unless it completes a monochromatic edge
    bool ok(int v, int col) {
        for (const auto& e : g_.edges()) {
            if (!std::binary_search(e.begin(), e.end(), v)) continue;
            bool mono = true;
            for (int u : e) {
                if (u == v) continue;
                const int cu = colors_[static_cast<std::size_t>(u)];
                if (cu != col) { mono = false; break; }
            }
            if (mono) return false;
        }
        return true;
    }

    const Hypergraph& g_;
    std::vector<int> order_;
    std::vector<int> colors_;
};

} // namespace detail

struct AlphaResult {
    int alpha = 0;
    std::vector<int> witness;
    bool exact = true; // false when the node budget ran out
};

/// Maximum independent set (no edge fully inside) via branch and bound.
inline AlphaResult exact_alpha(const Hypergraph& g, const OracleCaps& caps = {}) {
    if (g.n() > caps.alpha_n_cap)
        throw CapExceeded("exact_alpha: n=" + std::to_string(g.n()) + " exceeds cap " +
                          std::to_string(caps.alpha_n_cap));
    const int n = g.n();
    const int m = g.m();
    const int k = g.k();

    // order vertices by degree descending (decide the contested ones first)
    const auto deg = g.degrees();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });

    std::vector<std::vector<int>> edges_of(static_cast<std::size_t>(n));
    for (int e = 0; e < m; ++e)
        for (int v : g.edge(e)) edges_of[static_cast<std::size_t>(v)].push_back(e);

    std::vector<int> chosen_in_edge(static_cast<std::size_t>(m), 0);
    std::vector<std::uint8_t> in_set(static_cast<std::size_t>(n), 0);
    std::vector<int> best_set;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    // greedy seed for the bound
    {
        std::vector<int> cnt(static_cast<std::size_t>(m), 0);
        std::vector<int> greedy;
        for (int v = 0; v < n; ++v) {
            bool ok = true;
            for (int e : edges_of[static_cast<std::size_t>(v)])
                if (cnt[static_cast<std::size_t>(e)] == k - 1) { ok = false; break; }
            if (!ok) continue;
            greedy.push_back(v);
            for (int e : edges_of[static_cast<std::size_t>(v)]) ++cnt[static_cast<std::size_t>(e)];
        }
        best_set = std::move(greedy);
    }

    std::vector<int> current;
    auto dfs = [&](auto&& self, int idx) -> void {
        if (budget_hit) return;
        if (++nodes > caps.alpha_node_budget) { budget_hit = true; return; }
        if (static_cast<int>(current.size()) + (n - idx) <= static_cast<int>(best_set.size()))
            return;
        if (idx == n) {
            if (current.size() > best_set.size()) best_set = current;
            return;
        }
        const int v = order[static_cast<std::size_t>(idx)];
        bool can_take = true;
        for (int e : edges_of[static_cast<std::size_t>(v)])
            if (chosen_in_edge[static_cast<std::size_t>(e)] == k - 1) { can_take = false; break; }
        if (can_take) {
            current.push_back(v);
            for (int e : edges_of[static_cast<std::size_t>(v)]) ++chosen_in_edge[static_cast<std::size_t>(e)];
            self(self, idx + 1);
            for (int e : edges_of[static_cast<std::size_t>(v)]) --chosen_in_edge[static_cast<std::size_t>(e)];
            current.pop_back();
        }
        self(self, idx + 1);
    };
    dfs(dfs, 0);

    AlphaResult r;
    std::sort(best_set.begin(), best_set.end());
    r.alpha = static_cast<int>(best_set.size());
    r.witness = std::move(best_set);
    r.exact = !budget_hit;
    return r;
}

/// Exact weak chromatic number: minimum palette with no monochromatic edge.
inline ChromaticResult exact_chromatic(const Hypergraph& g, const OracleCaps& caps = {}) {
    if (g.n() > caps.n_cap)
        throw CapExceeded("exact_chromatic: n=" + std::to_string(g.n()) + " exceeds cap " +
                          std::to_string(caps.n_cap));
    ChromaticResult r;
    if (g.m() == 0) {
        r.chi = 1;
        r.witness = ProperColoring::of(std::vector<int>(static_cast<std::size_t>(g.n()), 0));
        return r;
    }
    const int alpha = exact_alpha(g, caps).alpha;
    const int lb = std::max(2, (g.n() + alpha - 1) / alpha);
    detail::ChromaticSearch search(g);
    for (int c = lb;; ++c) {
        std::vector<int> colors;
        if (search.feasible(c, colors)) {
            r.chi = c;
            r.witness = ProperColoring::of(std::move(colors));
            return r;
        }
    }
}

struct GammaResult {
    int gamma = 0;
    Cover witness;     // an optimal cover attaining gamma (empty for edgeless)
    bool convention = false; // edgeless: gamma := n by convention
};

/// Cover independence number: over all optimal covers (size exactly chi_c),
/// the largest class of vertices sharing one color bit vector.  Enumerates
/// the full tuple space of bicolorings without complement or mask
/// deduplication; refuses above the tuple budget.
inline GammaResult exact_gamma(const Hypergraph& g, int chi_c,
                               const OracleCaps& caps = {}) {
    if (g.n() > caps.n_cap)
        throw CapExceeded("exact_gamma: n=" + std::to_string(g.n()) + " exceeds cap " +
                          std::to_string(caps.n_cap));
    if (chi_c > caps.x_cap)
        throw CapExceeded("exact_gamma: chi_c=" + std::to_string(chi_c) +
                          " exceeds x-cap " + std::to_string(caps.x_cap) +
                          "; gamma is defined only over optimal covers");
    GammaResult r;
    if (chi_c == 0) {
        r.gamma = g.n();
        r.convention = true;
        return r;
    }
    const std::uint64_t space = std::uint64_t{1} << g.n();
    std::uint64_t tuples = 1;
    for (int i = 0; i < chi_c; ++i) {
        tuples = tuples * (space - static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i + 1);
        if (tuples > caps.gamma_tuple_budget)
            throw CapExceeded("exact_gamma: C(2^" + std::to_string(g.n()) + "," +
                              std::to_string(chi_c) + ") exceeds tuple budget");
    }

    detail::MaskTable table(g);
    const int words = table.words();
    const int n = g.n();
    int best = -1;
    std::vector<std::uint32_t> best_pats;

    std::vector<std::uint32_t> pats(static_cast<std::size_t>(chi_c));
    int counts[8]; // class tallies for x <= 3

    auto consider = [&]() {
        const int classes = 1 << chi_c;
        for (int i = 0; i < classes; ++i) counts[i] = 0;
        for (int v = 0; v < n; ++v) {
            int idx = 0;
            for (int j = 0; j < chi_c; ++j) idx |= static_cast<int>((pats[static_cast<std::size_t>(j)] >> v) & 1) << j;
            ++counts[idx];
        }
        int mx = 0;
        for (int i = 0; i < classes; ++i) mx = std::max(mx, counts[i]);
        if (mx > best) {
            best = mx;
            best_pats.assign(pats.begin(), pats.end());
        }
    };

    if (chi_c == 1) {
        for (std::uint64_t a = 0; a < space; ++a) {
            pats[0] = static_cast<std::uint32_t>(a);
            if (detail::all_zero(table.mask(pats[0]), words)) consider();
        }
    } else if (chi_c == 2) {
        std::vector<std::uint64_t> tmp(static_cast<std::size_t>(words));
        for (std::uint64_t a = 0; a + 1 < space; ++a) {
            const std::uint64_t* ma = table.mask(static_cast<std::uint32_t>(a));
            for (std::uint64_t b = a + 1; b < space; ++b) {
                const std::uint64_t* mb = table.mask(static_cast<std::uint32_t>(b));
                bool zero = true;
                for (int w = 0; w < words; ++w)
                    if (ma[w] & mb[w]) { zero = false; break; }
                if (!zero) continue;
                pats[0] = static_cast<std::uint32_t>(a);
                pats[1] = static_cast<std::uint32_t>(b);
                consider();
            }
        }
    } else { // chi_c == 3
        for (std::uint64_t a = 0; a + 2 < space; ++a) {
            const std::uint64_t* ma = table.mask(static_cast<std::uint32_t>(a));
            for (std::uint64_t b = a + 1; b + 1 < space; ++b) {
                const std::uint64_t* mb = table.mask(static_cast<std::uint32_t>(b));
                const std::uint64_t ab0 = ma[0] & mb[0];
                for (std::uint64_t c = b + 1; c < space; ++c) {
                    const std::uint64_t* mc = table.mask(static_cast<std::uint32_t>(c));
                    bool zero = (ab0 & mc[0]) == 0;
                    for (int w = 1; zero && w < words; ++w)
                        if (ma[w] & mb[w] & mc[w]) zero = false;
                    if (!zero) continue;
                    pats[0] = static_cast<std::uint32_t>(a);
                    pats[1] = static_cast<std::uint32_t>(b);
                    pats[2] = static_cast<std::uint32_t>(c);
                    consider();
                }
            }
        }
    }

    if (best < 0)
        throw Error("exact_gamma: no cover of size chi_c found; inconsistent chi_c input");
    r.gamma = best;
    for (std::uint32_t p : best_pats)
        r.witness.colorings.push_back(Bicoloring::from_pattern(n, p));
    return r;
}

struct OmegaResult {
    int omega = 0;
    std::vector<int> witness;
    bool convention = false; // edgeless: omega := k-1 by convention, flagged
};

namespace detail {

inline std::uint64_t pack_edge(const std::vector<int>& e) {
    std::uint64_t key = 0;
    for (int v : e) key = (key << 6) | static_cast<std::uint64_t>(v + 1);
    return key;
}

} // namespace detail

/// Clique number: the largest vertex set all of whose k-subsets are edges.
inline OmegaResult exact_omega(const Hypergraph& g, const OracleCaps& caps = {}) {
    if (g.n() > caps.omega_n_cap)
        throw CapExceeded("exact_omega: n=" + std::to_string(g.n()) + " exceeds cap " +
                          std::to_string(caps.omega_n_cap));
    OmegaResult r;
    if (g.m() == 0) {
        r.omega = g.k() - 1;
        r.convention = true;
        return r;
    }
    const int k = g.k();
    std::unordered_set<std::uint64_t> edge_set;
    edge_set.reserve(static_cast<std::size_t>(g.m()) * 2);
    for (const auto& e : g.edges()) edge_set.insert(detail::pack_edge(e));

    auto has_edge = [&](std::vector<int>& scratch) {
        return edge_set.count(detail::pack_edge(scratch)) > 0;
    };

    // v extends the complete set s iff every (k-1)-subset of s plus v is an edge
    auto compatible = [&](const std::vector<int>& s, int v) {
        std::vector<int> idx = first_combination(k - 1);
        std::vector<int> probe(static_cast<std::size_t>(k));
        do {
            for (int i = 0; i < k - 1; ++i) probe[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            probe[static_cast<std::size_t>(k - 1)] = v;
            std::sort(probe.begin(), probe.end());
            if (!has_edge(probe)) return false;
        } while (next_combination(idx, static_cast<int>(s.size())));
        return true;
    };

    std::vector<int> best;
    auto extend = [&](auto&& self, std::vector<int>& s, const std::vector<int>& cands) -> void {
        if (s.size() > best.size()) best = s;
        if (s.size() + cands.size() <= best.size()) return;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const int v = cands[i];
            if (!compatible(s, v)) continue;
            std::vector<int> next_cands(cands.begin() + static_cast<std::ptrdiff_t>(i) + 1, cands.end());
            s.push_back(v);
            self(self, s, next_cands);
            s.pop_back();
        }
    };

    for (const auto& e : g.edges()) {
        std::vector<int> s(e);
        std::vector<int> cands;
        for (int v = e.back() + 1; v < g.n(); ++v) cands.push_back(v);
        extend(extend, s, cands);
    }
    r.omega = static_cast<int>(best.size());
    r.witness = std::move(best);
    return r;
}

/// Exact ground truth for one instance: chi_c, chi, alpha, gamma, omega,
/// each with a re-verifiable witness.  Theorem-level consistency checks run
/// at report time and land in check_failures.
struct OracleReport {
    int n = 0, k = 0, m = 0;
    int chi_c = 0;
    int chi = 0;
    int alpha = 0;
    std::optional<int> gamma;      // absent when refused (chi_c above x-cap or budget)
    std::string gamma_refusal;     // reason when absent
    int omega = 0;
    bool omega_convention = false;
    bool gamma_convention = false;
    bool alpha_exact = true;

    Cover chi_c_witness;
    ProperColoring chi_witness;
    std::vector<int> alpha_witness;
    Cover gamma_witness;
    std::vector<int> omega_witness;

    std::vector<std::string> check_failures;
    bool checks_passed() const { return check_failures.empty(); }
};

inline OracleReport oracle_report(const Hypergraph& g, const OracleCaps& caps = {}) {
    OracleReport rep;
    rep.n = g.n();
    rep.k = g.k();
    rep.m = g.m();

    auto cc = exact_chi_c(g, -1, caps);
    rep.chi_c = cc.chi_c;
    rep.chi_c_witness = cc.witness;

    auto ch = exact_chromatic(g, caps);
    rep.chi = ch.chi;
    rep.chi_witness = ch.witness;

    auto al = exact_alpha(g, caps);
    rep.alpha = al.alpha;
    rep.alpha_witness = al.witness;
    rep.alpha_exact = al.exact;

    try {
        auto ga = exact_gamma(g, rep.chi_c, caps);
        rep.gamma = ga.gamma;
        rep.gamma_witness = ga.witness;
        rep.gamma_convention = ga.convention;
    } catch (const CapExceeded& e) {
        rep.gamma_refusal = e.what();
    }

    auto om = exact_omega(g, caps);
    rep.omega = om.omega;
    rep.omega_witness = om.witness;
    rep.omega_convention = om.convention;

    auto fail = [&](const std::string& s) { rep.check_failures.push_back(s); };

    if (rep.chi_c != ceil_log2(static_cast<std::uint64_t>(rep.chi)))
        fail("chi_c != ceil(log2 chi)");
    if (!verify_cover(g, rep.chi_c_witness).valid && g.m() > 0)
        fail("chi_c witness does not verify");
    if (!is_proper(g, rep.chi_witness))
        fail("chi witness is not proper");
    {
        // independent-set witness recheck
        std::vector<std::uint8_t> in(static_cast<std::size_t>(g.n()), 0);
        for (int v : rep.alpha_witness) in[static_cast<std::size_t>(v)] = 1;
        for (const auto& e : g.edges()) {
            bool inside = true;
            for (int v : e)
                if (!in[static_cast<std::size_t>(v)]) { inside = false; break; }
            if (inside) { fail("alpha witness contains an edge"); break; }
        }
    }
    if (rep.gamma) {
        if (rep.alpha < *rep.gamma) fail("alpha < gamma");
        if (g.m() > 0 && *rep.gamma < g.k() - 1) fail("gamma < k-1");
        if (g.m() > 0 && !rep.gamma_convention) {
            if (!verify_cover(g, rep.gamma_witness).valid) fail("gamma witness does not verify");
            if (rep.gamma_witness.size() != rep.chi_c) fail("gamma witness is not optimal size");
        }
        const std::uint64_t parts_lb =
            (static_cast<std::uint64_t>(g.n()) + static_cast<std::uint64_t>(*rep.gamma) - 1) /
            static_cast<std::uint64_t>(*rep.gamma);
        if (rep.chi_c < ceil_log2(parts_lb)) fail("chi_c < ceil(log2 ceil(n/gamma))");
        if (static_cast<std::uint64_t>(rep.chi) * 2 * static_cast<std::uint64_t>(*rep.gamma) <
            static_cast<std::uint64_t>(g.n()))
            fail("chi < n/(2 gamma)");
    }
    if (g.m() > 0) {
        // omega witness recheck: every k-subset present
        std::vector<int> idx = first_combination(g.k());
        if (static_cast<int>(rep.omega_witness.size()) >= g.k()) {
            std::unordered_set<std::uint64_t> edge_set;
            for (const auto& e : g.edges()) edge_set.insert(detail::pack_edge(e));
            std::vector<int> probe(static_cast<std::size_t>(g.k()));
            do {
                for (int i = 0; i < g.k(); ++i)
                    probe[static_cast<std::size_t>(i)] = rep.omega_witness[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                if (!edge_set.count(detail::pack_edge(probe))) {
                    fail("omega witness is not complete");
                    break;
                }
            } while (next_combination(idx, static_cast<int>(rep.omega_witness.size())));
        } else {
            fail("omega witness smaller than k on a nonempty hypergraph");
        }
    }
    return rep;
}

/// m(k,x) search result: exact minimum when the budget allowed full
/// enumeration for the given n, otherwise the verified range plus the
/// bracketing bounds.
struct MSearchResult {
    int k = 0, x = 0, n = 0;
    bool exact = false;
    int m_min = 0;                      // when exact
    std::optional<Hypergraph> witness;  // uncoverable witness (when exact)
    int verified_coverable_up_to = 0;   // all hypergraphs with <= this many edges have x-covers
    std::uint64_t instances_examined = 0;
    std::uint64_t lower_exclusive = 0;      // 2^{(k-1)x-1}; m(k,x) is strictly above
    std::uint64_t upper_probabilistic = 0;  // x k^2 2^{(k+1)x+2}
    std::uint64_t kn_upper_m = 0;           // C((k-1)2^x+1, k): complete-graph witness
    int kn_upper_t = 0;
    bool kn_verified = false;               // oracle confirmed chi_c(K_t^k) > x
};

inline MSearchResult m_search(int k, int x, int n, std::uint64_t budget = std::uint64_t{1} << 20,
                              const OracleCaps& caps = {}) {
    if (k < 2 || x < 1 || n < k) throw InvalidInput("m_search: need k >= 2, x >= 1, n >= k");
    MSearchResult res;
    res.k = k;
    res.x = x;
    res.n = n;
    {
        const int e_lo = (k - 1) * x - 1;
        res.lower_exclusive = e_lo >= 64 ? UINT64_MAX : (std::uint64_t{1} << e_lo);
        const int e_hi = (k + 1) * x + 2;
        if (e_hi >= 58)
            res.upper_probabilistic = UINT64_MAX;
        else {
            res.upper_probabilistic = static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(k) *
                              static_cast<std::uint64_t>(k) * (std::uint64_t{1} << e_hi);
        }
        const std::uint64_t t = static_cast<std::uint64_t>(k - 1) * (std::uint64_t{1} << x) + 1;
        res.kn_upper_t = static_cast<int>(t);
        res.kn_upper_m = binomial(static_cast<int>(t), k);
        if (static_cast<int>(t) <= caps.n_cap) {
            std::vector<Edge> edges;
            std::vector<int> c = first_combination(k);
            do {
                edges.push_back(c);
            } while (next_combination(c, static_cast<int>(t)));
            auto kn = Hypergraph::make(static_cast<int>(t), k, std::move(edges));
            auto cc = exact_chi_c(kn, x, caps);
            res.kn_verified = cc.exceeded_limit; // no x-cover exists
        }
    }

    // all possible edges on n vertices, in lexicographic order
    std::vector<Edge> all_edges;
    {
        std::vector<int> c = first_combination(k);
        do {
            all_edges.push_back(c);
        } while (next_combination(c, n));
    }
    const int total = static_cast<int>(all_edges.size());

    // canonical form under vertex permutations, for symmetry pruning (small n)
    std::vector<std::vector<int>> perms;
    if (n <= 6) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    auto canonical_key = [&](const std::vector<int>& edge_idx) {
        std::vector<std::vector<int>> best;
        for (const auto& p : perms) {
            std::vector<std::vector<int>> mapped;
            mapped.reserve(edge_idx.size());
            for (int ei : edge_idx) {
                std::vector<int> e = all_edges[static_cast<std::size_t>(ei)];
                for (auto& v : e) v = p[static_cast<std::size_t>(v)];
                std::sort(e.begin(), e.end());
                mapped.push_back(std::move(e));
            }
            std::sort(mapped.begin(), mapped.end());
            if (best.empty() || mapped < best) best = std::move(mapped);
        }
        std::string key;
        for (const auto& e : best)
            for (int v : e) key.push_back(static_cast<char>('a' + v));
        return key;
    };

    for (int m = 1; m <= total; ++m) {
        const std::uint64_t count = binomial(total, m);
        if (res.instances_examined + count > budget) {
            res.verified_coverable_up_to = m - 1;
            return res; // not exact; bracket fields carry the report
        }
        std::unordered_set<std::string> seen;
        std::vector<int> pick = first_combination(m);
        do {
            if (!perms.empty()) {
                auto key = canonical_key(pick);
                if (!seen.insert(std::move(key)).second) continue;
            }
            ++res.instances_examined;
            std::vector<Edge> edges;
            edges.reserve(pick.size());
            for (int ei : pick) edges.push_back(all_edges[static_cast<std::size_t>(ei)]);
            auto g = Hypergraph::make(n, k, std::move(edges));
            auto cc = exact_chi_c(g, x, caps);
            if (cc.exceeded_limit) {
                res.exact = true;
                res.m_min = m;
                res.witness = g;
                res.verified_coverable_up_to = m - 1;
                return res;
            }
        } while (next_combination(pick, total));
        res.verified_coverable_up_to = m;
    }
    // every hypergraph on n vertices has an x-cover
    res.verified_coverable_up_to = total;
    return res;
}

} // namespace bicover

#endif // BICOVER_ORACLES_HPP
