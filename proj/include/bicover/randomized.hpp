#ifndef BICOVER_RANDOMIZED_HPP
#define BICOVER_RANDOMIZED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bicover/bits.hpp"
#include "bicover/cover.hpp"
#include "bicover/errors.hpp"
#include "bicover/hypergraph.hpp"
#include "bicover/random_bits.hpp"

namespace bicover {

/// Transcript of one randomized cover computation.  For the sparse scheme
/// bits_used == attempts * n * x; for MTC bits_used == n*x + T*k*x.
struct RandomRun {
    std::uint64_t seed = 0;
    int x = 0;
    int attempts = 0;                 // sparse scheme
    std::int64_t resample_count = 0;  // MTC's T
    std::uint64_t bits_used = 0;
    bool valid = false;
    Cover cover;
    std::vector<int> resampled_edges; // MTC transcript, one edge index per step
};

// e <= E_UP_NUM / 2^51, certified over-approximation (see the unit test
// that pins it between partial sums of sum 1/i!).
inline constexpr std::uint64_t kEulerUpNumerator = 6121026514868074ULL;
inline constexpr int kEulerUpShift = 51;

/// Largest integer d with e*(d+1) <= 2^{x(k-1)}, computed against the
/// certified upper bound on e (safe-side: never overestimates).  Returns -1
/// when not even d = 0 satisfies the premise; saturates at INT64_MAX.
inline std::int64_t max_dependency_for(int x, int k) {
    if (x < 1 || k < 2) throw InvalidInput("max_dependency_for: need x >= 1, k >= 2");
    const long long exp2 = static_cast<long long>(x) * (k - 1) + kEulerUpShift;
    if (exp2 >= 127) return INT64_MAX; // quotient alone exceeds any physical edge count
    const unsigned __int128 num = static_cast<unsigned __int128>(1) << exp2;
    const unsigned __int128 q = num / kEulerUpNumerator; // floor(2^{x(k-1)} / e_up) = max d+1
    if (q == 0) return -1;
    const unsigned __int128 d = q - 1;
    if (d > static_cast<unsigned __int128>(INT64_MAX)) return INT64_MAX;
    return static_cast<std::int64_t>(d);
}

/// Smallest x >= 1 with e*(d+1) <= 2^{x(k-1)} (conservative: rounds up).
inline int min_cover_size_for_dependency(std::int64_t d, int k) {
    if (d < 0 || k < 2) throw InvalidInput("min_cover_size_for_dependency: need d >= 0, k >= 2");
    for (int x = 1;; ++x) {
        if (max_dependency_for(x, k) >= d) return x;
    }
}

struct DependencyBudget {
    int k = 0;
    int x = 0;
    std::int64_t max_dependency = 0;

    static DependencyBudget of(int x, int k) {
        return DependencyBudget{k, x, max_dependency_for(x, k)};
    }
};

namespace detail {

inline Cover draw_cover(const Hypergraph& g, int x, BitSource& bits) {
    Cover c;
    c.colorings.reserve(static_cast<std::size_t>(x));
    for (int j = 0; j < x; ++j)
        c.colorings.emplace_back(std::vector<std::uint8_t>(static_cast<std::size_t>(g.n())));
    for (int v = 0; v < g.n(); ++v)
        for (int j = 0; j < x; ++j)
            c.colorings[static_cast<std::size_t>(j)].bits[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>(bits.next_bit());
    return c;
}

} // namespace detail

/// Repeated independent draws of x uniform bicolorings until one covers G.
/// Requires |E| <= 2^{(k-1)x-1} (expected attempts below two) unless
/// overridden.  Gives up after 64 attempts.
inline RandomRun sparse_random_cover(const Hypergraph& g, int x, std::uint64_t seed,
                                     bool override_precondition = false,
                                     int max_attempts = 64) {
    if (x < 0) throw InvalidInput("sparse_random_cover: x must be nonnegative");
    if (!override_precondition) {
        const long long e = static_cast<long long>(g.k() - 1) * x - 1;
        bool bound_ok;
        if (e < 0)
            bound_ok = g.m() == 0; // bound is 1/2: only the edgeless hypergraph qualifies
        else if (e >= 63)
            bound_ok = true;
        else
            bound_ok = static_cast<std::uint64_t>(g.m()) <= (std::uint64_t{1} << e);
        if (!bound_ok)
            throw InvalidInput("sparse_random_cover: |E|=" + std::to_string(g.m()) +
                               " exceeds 2^{(k-1)x-1}; pass the override flag to run anyway");
    }
    RandomRun run;
    run.seed = seed;
    run.x = x;
    BitSource bits(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Cover c = detail::draw_cover(g, x, bits);
        run.attempts = attempt;
        if (verify_cover(g, c).valid) {
            run.valid = true;
            run.cover = std::move(c);
            run.bits_used = bits.bits_used();
            return run;
        }
    }
    run.valid = false;
    run.bits_used = bits.bits_used();
    return run;
}

/// Moser-Tardos resampler for a size-x cover: draw x bits per vertex, then
/// while some edge is monochromatic in every bicoloring, redraw all x bits
/// of that edge's vertices.  The violated edge picked is always the one of
/// smallest index, so a run is a pure function of its seed.
inline RandomRun mtc(const Hypergraph& g, int x, std::uint64_t seed,
                     bool override_precondition = false,
                     std::int64_t max_resamples = -1) {
    if (x < 1) throw InvalidInput("mtc: x must be positive");
    if (!override_precondition) {
        const std::int64_t budget = max_dependency_for(x, g.k());
        const int d = dependency(g);
        // d == 0 is always fine: the events are independent and each
        // resample fixes its edge with probability at least 1/2
        if (d > 0 && d > budget)
            throw InvalidInput("mtc: dependency " + std::to_string(d) +
                               " exceeds budget " + std::to_string(budget) +
                               " = floor(2^{x(k-1)}/e - 1); pass the override flag to run anyway");
    }
    if (max_resamples < 0) {
        const int d = std::max(1, dependency(g));
        max_resamples = 4096 + 1024 * static_cast<std::int64_t>(std::max(1, g.m() / d));
    }

    RandomRun run;
    run.seed = seed;
    run.x = x;
    BitSource bits(seed);
    Cover c = detail::draw_cover(g, x, bits);

    // violated = monochromatic in every bicoloring
    auto is_violated = [&](int e) {
        const auto& ed = g.edge(e);
        for (int j = 0; j < x; ++j) {
            const auto& col = c.colorings[static_cast<std::size_t>(j)];
            const int c0 = col.bit(ed[0]);
            bool mono = true;
            for (std::size_t i = 1; i < ed.size(); ++i)
                if (col.bit(ed[i]) != c0) { mono = false; break; }
            if (!mono) return false;
        }
        return true;
    };

    while (true) {
        int target = -1;
        for (int e = 0; e < g.m(); ++e)
            if (is_violated(e)) { target = e; break; }
        if (target < 0) break;
        if (run.resample_count >= max_resamples)
            throw Error("mtc: resample guard tripped after T=" +
                        std::to_string(run.resample_count) + " steps (m=" +
                        std::to_string(g.m()) + ", seed=" + std::to_string(seed) + ")");
        ++run.resample_count;
        run.resampled_edges.push_back(target);
        for (int v : g.edge(target))
            for (int j = 0; j < x; ++j)
                c.colorings[static_cast<std::size_t>(j)].bits[static_cast<std::size_t>(v)] =
                    static_cast<std::uint8_t>(bits.next_bit());
    }
    run.valid = true;
    run.cover = std::move(c);
    run.bits_used = bits.bits_used();
    return run;
}

} // namespace bicover

#endif // BICOVER_RANDOMIZED_HPP
